#pragma once

#include <charconv>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatspec/invariants.hpp"
#include "quatspec/models.hpp"
#include "quatspec/polynomial.hpp"
#include "quatspec/qmatrix.hpp"
#include "quatspec/quaternion.hpp"
#include "quatspec/rng.hpp"

namespace quatspec {

using Json = nlohmann::ordered_json;

/// Shortest decimal representation that round-trips the double bit-exactly.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// --- Quaternion <-> [w, x, y, z] ------------------------------------------

inline Json quaternion_to_json(Quaternion q) {
  return Json::array({q.w, q.x, q.y, q.z});
}

inline Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("quaternion: expected a 4-array [w, x, y, z]");
  for (const auto& c : j)
    if (!c.is_number()) throw ParseError("quaternion: non-numeric component");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

// --- QMatrix ----------------------------------------------------------------

inline Json qmatrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back(quaternion_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

inline QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw ParseError("qmatrix: expected {rows, cols, entries}");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const Json& e = j["entries"];
  if (!e.is_array() || e.size() != rows)
    throw ParseError("qmatrix: entries must hold `rows` rows");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols)
      throw ParseError("qmatrix: row length mismatch");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = quaternion_from_json(e[i][k]);
  }
  for (const Quaternion& q : m.a)
    if (!is_finite(q)) throw ParseError("qmatrix: non-finite entry");
  return m;
}

// --- Polynomial -------------------------------------------------------------

inline Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (Complex c : p.coeffs)
    coeffs.push_back(Json::array({c.real(), c.imag()}));
  return Json{{"coeffs", std::move(coeffs)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw ParseError("polynomial: expected {coeffs}");
  Polynomial p;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_array() || c.size() != 2)
      throw ParseError("polynomial: coefficient must be [re, im]");
    p.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  return p;
}

// --- InvariantReport ---------------------------------------------------------

inline Json report_to_json(const InvariantReport& r) {
  Json tk = Json::array();
  for (double t : r.tk) tk.push_back(t);
  Json dp = Json::array();
  for (double c : r.det_poly) dp.push_back(Json::array({c, 0.0}));
  Json eigs = Json::array();
  for (Complex l : r.eigenvalues)
    eigs.push_back(Json::array({l.real(), l.imag()}));
  Json res = Json::object();
  for (const auto& [k, v] : r.residuals) res[k] = v;
  return Json{{"t1", r.t1},
              {"t2", r.t2},
              {"tk", std::move(tk)},
              {"det_poly", Json{{"coeffs", std::move(dp)}}},
              {"eigenvalues", std::move(eigs)},
              {"residuals", std::move(res)}};
}

// --- TraceClassModel ---------------------------------------------------------

namespace detail {

inline std::function<double(std::size_t)> sequence_from_json(const Json& j,
                                                             const char* who) {
  if (!j.is_object() || !j.contains("type") || !j.contains("param"))
    throw ParseError(std::string(who) + ": expected {type, param}");
  const std::string type = j["type"].get<std::string>();
  const double param = j["param"].get<double>();
  if (type == "geometric")
    return [param](std::size_t k) {
      return std::pow(param, static_cast<double>(k));
    };
  if (type == "power")
    return [param](std::size_t k) {
      return std::pow(static_cast<double>(k), -param);
    };
  throw ParseError(std::string(who) + ": unknown sequence type '" + type + "'");
}

}  // namespace detail

/// Model JSON:
///   {"kind": "diagonal", "lambda": {"type": "geometric"|"power", "param": r},
///    "p": p}
///   {"kind": "kernel", "mu": {...}, "nu": {...},
///    "d": {"type": "seeded_bounded", "seed": s, "bound": M}, "p": p}
inline TraceClassModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("model: expected {kind, ...}");
  const std::string kind = j["kind"].get<std::string>();
  const double p = j.contains("p") ? j["p"].get<double>() : 1.0;

  if (kind == "diagonal") {
    if (!j.contains("lambda")) throw ParseError("model: diagonal needs lambda");
    auto seq = detail::sequence_from_json(j["lambda"], "lambda");
    return TraceClassModel::diagonal(
        [seq](std::size_t k) { return Complex(seq(k), 0.0); }, p);
  }
  if (kind == "kernel") {
    if (!j.contains("mu") || !j.contains("nu") || !j.contains("d"))
      throw ParseError("model: kernel needs mu, nu, d");
    auto mu = detail::sequence_from_json(j["mu"], "mu");
    auto nu = detail::sequence_from_json(j["nu"], "nu");
    const Json& dj = j["d"];
    if (!dj.is_object() || dj.value("type", "") != "seeded_bounded")
      throw ParseError("model: d must be {type: seeded_bounded, seed, bound}");
    const auto seed = dj["seed"].get<std::uint64_t>();
    const double bound = dj["bound"].get<double>();
    auto d = [seed, bound](std::size_t m, std::size_t n) {
      SplitMix64 g(seed, (static_cast<std::uint64_t>(m) << 32) |
                             static_cast<std::uint64_t>(n));
      // components in [-1, 1] give |q| <= 2, so scale by bound/2
      return (bound / 2.0) * g.next_quaternion();
    };
    return TraceClassModel::kernel(std::move(mu), std::move(nu), std::move(d),
                                   bound, p);
  }
  throw ParseError("model: unknown kind '" + kind + "'");
}

// --- ConvergenceTable CSV ----------------------------------------------------

/// Header always emitted; '.' decimal, LF line endings, shortest
/// round-trip number formatting.
inline std::string table_to_csv(const ConvergenceTable& t) {
  std::string out = "N,value,abs_delta\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.value.real());
    out += ',';
    out += format_double(row.abs_delta);
    out += '\n';
  }
  return out;
}

}  // namespace quatspec
