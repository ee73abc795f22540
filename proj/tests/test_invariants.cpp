#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "quatspec/exact.hpp"
#include "quatspec/invariants.hpp"

using namespace quatspec;
using namespace qstest;
using Catch::Approx;

namespace {

QMatrix worked_example() {
  QMatrix a(2, 2);
  a(0, 0) = Quaternion{3, 1, 0, 0};
  a(1, 1) = q_ij;
  return a;
}

}  // namespace

TEST_CASE("first-order trace") {
  CHECK(trace1(worked_example()) == 6.0);
  CHECK(trace1(q_identity(5)) == 10.0);
  QMatrix j(1, 1);
  j(0, 0) = q_j;
  CHECK(trace1(j) == 0.0);

  SplitMix64 g(401);
  for (int t = 0; t < 30; ++t) {
    const QMatrix a = sample_qmatrix(g, 1 + g.next_u64() % 6);
    CHECK(trace1(a) == trace(companion(a)).real());
  }
}

TEST_CASE("k-th order traces") {
  const QMatrix a = worked_example();
  CHECK(trace_k(a, 2) == Approx(11.0).margin(1e-12));
  CHECK(trace_k(a, 0) == 1.0);
  CHECK(trace_k(q_identity(2), 2) == Approx(6.0).margin(1e-12));

  SplitMix64 g(402);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + g.next_u64() % 4;
    const QMatrix m = sample_qmatrix(g, n, /*normalize=*/true);
    for (std::size_t k = 2 * n + 1; k <= 2 * n + 3; ++k)
      CHECK(std::abs(trace_k(m, k)) < 1e-10);
  }
}

TEST_CASE("trace_k equals the exterior trace of the companion") {
  SplitMix64 g(403);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + g.next_u64() % 5;
    const QMatrix a = sample_qmatrix(g, n);
    const CMatrix chi = companion(a);
    for (std::size_t k = 0; k <= 2 * n; ++k) {
      const Complex want = exterior_trace(chi, k);
      CHECK(std::abs(trace_k(a, k) - want.real()) <
            1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("Fredholm determinant polynomial of the worked example") {
  const Polynomial p = fredholm_poly(worked_example(), DetSign::minus_zA);
  const double want[5] = {1, -6, 11, -6, 10};
  REQUIRE(p.coeffs.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(p.coeffs[k].real() == Approx(want[k]).margin(1e-10));
    CHECK(p.coeffs[k].imag() == 0.0);
  }

  const Polynomial q = fredholm_poly(worked_example(), DetSign::plus_zA);
  for (int k = 0; k < 5; ++k)
    CHECK(q.coeffs[k].real() == Approx(std::abs(want[k])).margin(1e-10));
}

TEST_CASE("Fredholm polynomial of [[j]] is 1 + z^2") {
  QMatrix j(1, 1);
  j(0, 0) = q_j;
  const Polynomial p = fredholm_poly(j);
  REQUIRE(p.coeffs.size() == 3);
  CHECK(p.coeffs[0].real() == Approx(1.0));
  CHECK(p.coeffs[1].real() == Approx(0.0).margin(1e-15));
  CHECK(p.coeffs[2].real() == Approx(1.0));
}

TEST_CASE("Fredholm polynomial of the zero matrix is [1]") {
  const Polynomial p = fredholm_poly(QMatrix(3, 3));
  REQUIRE(p.coeffs.size() == 1);
  CHECK(p.coeffs[0] == Complex(1.0));
}

TEST_CASE("Fredholm polynomial degree and leading coefficient") {
  SplitMix64 g(404);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + g.next_u64() % 5;
    const QMatrix a = sample_qmatrix(g, n);
    const CMatrix chi = companion(a);
    const double d = det(chi).real();
    if (std::abs(d) < 1e-6) continue;  // effectively singular draw
    const Polynomial p = fredholm_poly(a);
    REQUIRE(p.coeffs.size() == 2 * n + 1);
    CHECK(p.coeffs.back().real() == Approx(d).epsilon(1e-8));
  }
}

TEST_CASE("Study determinant of the companion is nonnegative") {
  SplitMix64 g(405);
  for (int t = 0; t < 100; ++t) {
    const QMatrix a = sample_qmatrix(g, 1 + g.next_u64() % 6);
    const Complex d = det(companion(a));
    const double scale = std::max(1.0, std::abs(d));
    CHECK(d.real() >= -1e-10 * scale);
    CHECK(std::abs(d.imag()) <= 1e-10 * scale);
  }
}

TEST_CASE("standard eigenvalues of the worked example") {
  const auto se = standard_eigenvalues(worked_example());
  REQUIRE(se.size() == 2);
  CHECK(std::abs(se[0] - Complex(3, 1)) < 1e-12);
  CHECK(std::abs(se[1] - Complex(0, 1)) < 1e-12);
}

TEST_CASE("standard eigenvalues of the identity") {
  const auto se = standard_eigenvalues(q_identity(3));
  REQUIRE(se.size() == 3);
  for (Complex l : se) {
    CHECK(l.real() == Approx(1.0).margin(1e-12));
    CHECK(l.imag() == 0.0);
  }
}

TEST_CASE("standard eigenvalues match the exact companion spectrum") {
  SplitMix64 g(406);
  for (int t = 0; t < 30; ++t) {
    const QMatrix a = sample_dyadic_qmatrix(g, 4);
    const auto se = standard_eigenvalues(a);
    REQUIRE(se.size() == 4);
    for (std::size_t i = 0; i + 1 < se.size(); ++i)
      CHECK(std::abs(se[i]) >= std::abs(se[i + 1]) - 1e-12);
    for (Complex l : se) CHECK(l.imag() >= 0.0);
    // the conjugate-completed multiset must be the exact spectrum of chi
    std::vector<Complex> doubled;
    for (Complex l : se) {
      doubled.push_back(l);
      doubled.push_back(std::conj(l));
    }
    CHECK(matches_exact_spectrum(companion(a), doubled, 1e-7));
  }
}

TEST_CASE("entrywise second-order trace") {
  CHECK(trace2_entrywise(worked_example()) == Approx(11.0).margin(1e-13));

  SplitMix64 g(407);
  const Quaternion q = g.next_quaternion();
  QMatrix one(1, 1);
  one(0, 0) = q;
  CHECK(trace2_entrywise(one) == Approx(norm_sq(q)).margin(1e-14));

  for (int t = 0; t < 40; ++t) {
    const QMatrix a = sample_qmatrix(g, 5);
    const double want = trace_k(a, 2);
    CHECK(trace2_entrywise(a) ==
          Approx(want).epsilon(1e-9).margin(1e-12));
  }
}

TEST_CASE("verify_identities on the worked example") {
  const InvariantReport rep = verify_identities(worked_example(), 1e-12);
  CHECK(rep.t1 == Approx(6.0).margin(1e-12));
  CHECK(rep.t2 == Approx(11.0).margin(1e-12));
  for (const auto& [k, v] : rep.residuals) {
    INFO(k);
    CHECK(v < 1e-12);
  }
  CHECK(rep.all_ok());
}

TEST_CASE("verify_identities on the zero matrix is exact") {
  const InvariantReport rep = verify_identities(QMatrix(2, 2), 1e-15);
  for (const auto& [k, v] : rep.residuals) {
    INFO(k);
    CHECK(v == 0.0);
  }
}

TEST_CASE("verify_identities over a seeded sweep") {
  SplitMix64 g(408);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + g.next_u64() % 6;
    const QMatrix a = sample_qmatrix(g, n, /*normalize=*/true);
    const InvariantReport rep = verify_identities(a, 1e-8);
    for (const auto& [k, v] : rep.residuals) {
      INFO("trial " << t << " residual " << k);
      CHECK(v < 1e-8);
    }
  }
}

TEST_CASE("traces and standard eigenvalues are similarity invariants") {
  SplitMix64 g(409);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + g.next_u64() % 3;
    const QMatrix a = sample_qmatrix(g, n, /*normalize=*/true);
    const auto [s, s_inv] = sample_similarity(g, n);
    const QMatrix conjugated = q_matmul(q_matmul(s_inv, a), s);

    const auto ta = traces_all(a, 2 * n);
    const auto tb = traces_all(conjugated, 2 * n);
    for (std::size_t k = 0; k <= 2 * n; ++k)
      CHECK(std::abs(ta[k] - tb[k]) <= 1e-7 * std::max(1.0, std::abs(ta[k])));

    auto ea = standard_eigenvalues(a);
    auto eb = standard_eigenvalues(conjugated);
    REQUIRE(ea.size() == eb.size());
    for (std::size_t i = 0; i < ea.size(); ++i)
      CHECK(std::abs(ea[i] - eb[i]) < 1e-7 * std::max(1.0, std::abs(ea[i])));
  }
}

TEST_CASE("operations reject non-square matrices") {
  const QMatrix bad(2, 3);
  CHECK_THROWS_AS(trace1(bad), NonSquareError);
  CHECK_THROWS_AS(trace_k(bad, 1), NonSquareError);
  CHECK_THROWS_AS(fredholm_poly(bad), NonSquareError);
  CHECK_THROWS_AS(standard_eigenvalues(bad), NonSquareError);
  CHECK_THROWS_AS(trace2_entrywise(bad), NonSquareError);
  CHECK_THROWS_AS(verify_identities(bad), NonSquareError);
}

TEST_CASE("defective spectra pair under a tolerance matching their conditioning") {
  // A conjugated Jordan block perturbs its double eigenvalue by ~sqrt(eps),
  // beyond the default pairing tolerance: the contract is to flag rather
  // than guess, and to pair fine once tol covers the achievable accuracy.
  SplitMix64 g(5150, 7);
  QMatrix j(2, 2);
  j(0, 0) = q_i;
  j(1, 1) = q_i;
  j(0, 1) = q_one;
  QMatrix s = q_identity(2), s_inv = q_identity(2);
  Quaternion q = g.next_quaternion();
  q = (1.3 / abs(q)) * q;
  s(0, 0) = q;
  s_inv(0, 0) = inverse(q);
  const Quaternion sh = 0.5 * g.next_quaternion();
  QMatrix e = q_identity(2), e_inv = q_identity(2);
  e(1, 0) = sh;
  e_inv(1, 0) = -sh;
  s = q_matmul(s, e);
  s_inv = q_matmul(e_inv, s_inv);
  const QMatrix a = q_matmul(q_matmul(s_inv, j), s);

  const auto se = standard_eigenvalues(a, 1e-6);
  REQUIRE(se.size() == 2);
  for (Complex l : se) CHECK(std::abs(l - Complex(0, 1)) < 1e-5);
}
