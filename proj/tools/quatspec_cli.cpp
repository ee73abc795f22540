// Command-line surface for the quaternionic spectral toolkit: reads matrices
// and operator models as JSON, emits invariant reports, eigenvalues,
// determinant polynomials, verification sweeps, and convergence tables.
//
// Exit codes: 0 success, 2 input error, 3 numerical non-convergence.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quatspec/json_io.hpp"
#include "quatspec/quatspec.hpp"

namespace {

using namespace quatspec;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t trials = 100;
  std::size_t n = 4;
  std::size_t trunc = 64;
  std::size_t n_max = 4096;
  double z = 1.0;
  std::size_t threads = 1;
  std::string format;  // empty = per-command default
};

std::string read_input(const Options& opt) {
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(opt.input);
  if (!f) throw ParseError("cannot open input file: " + opt.input);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + opt.output);
  f << text;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

QMatrix read_qmatrix(const Options& opt) {
  return qmatrix_from_json(parse_json(read_input(opt)));
}

int cmd_invariants(const Options& opt) {
  const QMatrix a = read_qmatrix(opt);
  const InvariantReport rep = verify_identities(a, opt.tol);
  write_output(opt, report_to_json(rep).dump(2) + "\n");
  return rep.all_ok() ? kExitOk : kExitNoConvergence;
}

int cmd_eigs(const Options& opt) {
  const QMatrix a = read_qmatrix(opt);
  Json eigs = Json::array();
  for (Complex l : standard_eigenvalues(a))
    eigs.push_back(Json::array({l.real(), l.imag()}));
  write_output(opt, Json{{"eigenvalues", std::move(eigs)}}.dump(2) + "\n");
  return kExitOk;
}

int cmd_detpoly(const Options& opt) {
  const QMatrix a = read_qmatrix(opt);
  write_output(opt,
               polynomial_to_json(fredholm_poly(a, DetSign::minus_zA)).dump(2) +
                   "\n");
  return kExitOk;
}

int cmd_svd(const Options& opt) {
  const QMatrix a = read_qmatrix(opt);
  Json sv = Json::array();
  for (double s : singular_values(a)) sv.push_back(s);
  write_output(opt, Json{{"singular_values", std::move(sv)}}.dump(2) + "\n");
  return kExitOk;
}

// Per-trial record of the verification sweep.
struct TrialResult {
  std::map<std::string, double> residuals;
  bool failed = false;
};

TrialResult run_verify_trial(std::uint64_t seed, std::size_t trial,
                             std::size_t n, double tol) {
  SplitMix64 g(seed, trial);
  const QMatrix a = sample_qmatrix(g, n, /*normalize=*/true);

  TrialResult res;
  const InvariantReport rep = verify_identities(a, tol);
  res.residuals = rep.residuals;

  double weyl = 0.0;
  for (double p : {1.0, 1.5, 2.0}) {
    const WeylCheck w = weyl_check(a, p);
    weyl = std::max(weyl, w.lhs - w.rhs);
    if (!w.ok) res.failed = true;
  }
  res.residuals["weyl_excess"] = weyl;

  const QMatrix b = sample_qmatrix(g, n, /*normalize=*/true);
  const double lhs = schatten_norm(q_matmul(a, b), 1.0);
  const double rhs = schatten_norm(a, 1.0) * schatten_norm(b, 1.0);
  res.residuals["submult_excess"] = std::max(0.0, lhs - rhs);
  if (lhs > rhs * (1.0 + 1e-8)) res.failed = true;

  for (const char* key : {"r1", "r2", "r3", "r4"})
    if (!(res.residuals[key] < tol)) res.failed = true;
  return res;
}

int cmd_verify(const Options& opt) {
  if (opt.n > 16) throw ParseError("verify: n must be <= 16");
  if (opt.trials < 1) throw ParseError("verify: trials must be >= 1");

  std::vector<TrialResult> results(opt.trials);
  const std::size_t workers = std::max<std::size_t>(1, opt.threads);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  auto work = [&]() {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= opt.trials) return;
      results[t] = run_verify_trial(opt.seed, t, opt.n, opt.tol);
    }
  };
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  // Sequential aggregation by trial index keeps the output byte-identical
  // for any worker count.
  std::map<std::string, double> max_res;
  Json failures = Json::array();
  for (std::size_t t = 0; t < opt.trials; ++t) {
    for (const auto& [k, v] : results[t].residuals) {
      auto it = max_res.find(k);
      if (it == max_res.end() || v > it->second) max_res[k] = v;
    }
    if (results[t].failed) failures.push_back(t);
  }

  Json res = Json::object();
  for (const auto& [k, v] : max_res) res[k] = v;
  const bool ok = failures.empty();
  Json out{{"trials", opt.trials}, {"n", opt.n},
           {"seed", opt.seed},     {"tol", opt.tol},
           {"max_residuals", res}, {"failures", failures}};
  write_output(opt, out.dump(2) + "\n");
  return ok ? kExitOk : kExitNoConvergence;
}

std::string table_to_format(const ConvergenceTable& t, const Options& opt) {
  if (opt.format != "json") return table_to_csv(t);  // CSV is the default
  Json rows = Json::array();
  for (const auto& row : t.rows)
    rows.push_back(Json::array({row.n, row.value.real(), row.abs_delta}));
  return Json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

int cmd_converge(const Options& opt) {
  const TraceClassModel model = model_from_json(parse_json(read_input(opt)));
  try {
    const DetLimit lim =
        fredholm_det_limit(model, Complex(opt.z, 0.0), opt.tol, opt.n_max);
    write_output(opt, table_to_format(lim.table, opt));
    return kExitOk;
  } catch (const NotConvergedError& e) {
    write_output(opt, table_to_format(e.table, opt));
    std::cerr << "converge: " << e.what() << "\n";
    return kExitNoConvergence;
  }
}

int cmd_growth(const Options& opt) {
  const TraceClassModel model = model_from_json(parse_json(read_input(opt)));
  const std::size_t deg = opt.trunc;
  const std::vector<double> coeffs = det_poly_coeffs(model, opt.trunc, deg);
  // The order formula is a limsup; sample the upper envelope over the tail
  // half of the coefficient window.  Finite-rank spectra leave the window
  // empty, so fall back to the half-point of the last nonzero coefficient.
  std::size_t last_nonzero = 0;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k] != 0.0) last_nonzero = k;
  if (last_nonzero == 0)
    throw ParseError("growth: determinant has no nonzero coefficients");
  const std::size_t n_min =
      std::max<std::size_t>(2, std::min(deg, last_nonzero) / 2);
  const double est = order_estimate(coeffs, n_min);

  Json checks = Json::object();
  for (double f : {1.1, 1.5, 2.0}) {
    const double q = f * model.p;
    checks["q=" + format_double(q)] =
        coefficient_decay_check(coeffs, model.p, q);
  }
  Json out{{"p", model.p},
           {"trunc", opt.trunc},
           {"order_estimate", est},
           {"order_bound",
            model.p < 2.0 ? Json(1.0 / (1.0 / model.p - 0.5)) : Json()},
           {"decay_checks", std::move(checks)}};
  write_output(opt, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_compose(const Options& opt) {
  const Json j = parse_json(read_input(opt));
  if (!j.is_object() || !j.contains("first") || !j.contains("second"))
    throw ParseError("compose: expected {first: model, second: model}");
  const TraceClassModel u = model_from_json(j["first"]);
  const TraceClassModel v = model_from_json(j["second"]);

  Json out = Json::object();
  const char* names[2] = {"first", "second"};
  const TraceClassModel* models[2] = {&u, &v};
  for (int i = 0; i < 2; ++i) {
    const ComposeBound cb =
        compose_schatten_bound(*models[i], opt.trunc, models[i]->p, models[i]->p);
    out[names[i]] = Json{{"norm_r", cb.norm_r},
                         {"bound", cb.bound},
                         {"r", cb.r},
                         {"ok", cb.norm_r <= cb.bound * (1.0 + 1e-8)}};
  }

  // l^r norms of the composed truncation at half and full size; Fredholm
  // kernel composition keeps them stable as the window doubles.
  const double r_comp = 1.0 / (1.0 / u.p + 1.0 / v.p - 1.0);
  Json comp = Json::object();
  comp["r"] = r_comp;
  for (std::size_t n : {opt.trunc / 2, opt.trunc}) {
    const QMatrix prod = q_matmul(truncate(u, n), truncate(v, n));
    comp["lr_norm_N" + std::to_string(n)] =
        lp_norm(standard_eigenvalues(prod), r_comp);
  }
  out["composition"] = std::move(comp);
  write_output(opt, out.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic spectral invariants toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input", opt.input, "input path or '-' for stdin");
  app.add_option("--output", opt.output, "output path or '-' for stdout");
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--tol", opt.tol, "tolerance");
  app.add_option("--trials", opt.trials, "number of trials");
  app.add_option("--n", opt.n, "matrix size for sweeps");
  app.add_option("--trunc", opt.trunc, "truncation size for models");
  app.add_option("--nmax", opt.n_max, "truncation ceiling for converge");
  app.add_option("--z", opt.z, "evaluation point (real)");
  app.add_option("--threads", opt.threads, "worker threads for sweeps");
  app.add_option("--format", opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* invariants = app.add_subcommand("invariants", "identity report");
  auto* eigs = app.add_subcommand("eigs", "standard eigenvalues");
  auto* detpoly = app.add_subcommand("detpoly", "Fredholm determinant poly");
  auto* svd = app.add_subcommand("svd", "singular values");
  auto* verify = app.add_subcommand("verify", "seeded verification sweep");
  auto* converge = app.add_subcommand("converge", "truncation limit table");
  auto* growth = app.add_subcommand("growth", "determinant order report");
  auto* compose = app.add_subcommand("compose", "composition bounds");
  // global flags may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!(opt.tol > 0.0)) throw ParseError("tol must be > 0");
    if (invariants->parsed()) return cmd_invariants(opt);
    if (eigs->parsed()) return cmd_eigs(opt);
    if (detpoly->parsed()) return cmd_detpoly(opt);
    if (svd->parsed()) return cmd_svd(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (converge->parsed()) return cmd_converge(opt);
    if (growth->parsed()) return cmd_growth(opt);
    if (compose->parsed()) return cmd_compose(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonSquareError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ShapeMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NoConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const NotConvergedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
