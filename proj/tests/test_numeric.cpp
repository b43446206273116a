#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ladder/fock.hpp"
#include "ladder/gauss_integral.hpp"
#include "ladder/moments.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/section.hpp"
#include "test_support.hpp"

using namespace ladder;
using ladder::testing::Rng;

namespace {

using Cd = std::complex<double>;

Cd eval_wpoly(const WPoly& poly, std::span<const Cd> w) {
  Cd acc = 0.0;
  for (const auto& t : poly) {
    Cd m = t.coeff;
    for (size_t j = 0; j < w.size(); ++j) {
      for (int e = 0; e < t.w_exp[static_cast<int>(j)]; ++e) m *= w[j];
      for (int e = 0; e < t.wbar_exp[static_cast<int>(j)]; ++e) m *= std::conj(w[j]);
    }
    acc += m;
  }
  return acc;
}

}  // namespace

TEST_CASE("closed-form gaussian integrals match the quadrature oracle") {
  Rng rng(441);
  for (int q = 1; q <= 2; ++q) {
    for (int trial = 0; trial < 4; ++trial) {
      // U = I + small Hermitian perturbation keeps U + U^* comfortably
      // positive definite, so both the closed form and the rule apply.
      CMatD u = CMatD::identity(q);
      for (int i = 0; i < q; ++i) {
        u.at(i, i) += Cd(rng.real_in(-0.2, 0.2), 0.0);
        for (int j = i + 1; j < q; ++j) {
          Cd off(rng.real_in(-0.15, 0.15), rng.real_in(-0.15, 0.15));
          u.at(i, j) += off;
          u.at(j, i) += std::conj(off);
        }
      }
      std::vector<Cd> a = rng.complex_point(q, 0.3);
      std::vector<Cd> b = rng.complex_point(q, 0.3);

      WPoly poly;
      for (int t = 0; t < 3; ++t)
        poly.push_back({rng.weighted_tuple(q, rng.int_in(0, 2)),
                        rng.weighted_tuple(q, rng.int_in(0, 2)),
                        Cd(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0))});

      Cd closed = gaussian_poly_integral(poly, u, std::span<const Cd>(a), std::span<const Cd>(b));

      // The oracle integrates against e^{-|w|^2}; fold the remaining factor
      // of the kernel into the integrand.
      Integrand f = [&](std::span<const Cd> w) {
        Cd quad = 0.0, lin = 0.0;
        double diag = 0.0;
        for (int i = 0; i < q; ++i) {
          diag += std::norm(w[static_cast<size_t>(i)]);
          lin += std::conj(a[static_cast<size_t>(i)]) * w[static_cast<size_t>(i)] +
                 std::conj(w[static_cast<size_t>(i)]) * b[static_cast<size_t>(i)];
          for (int j = 0; j < q; ++j)
            quad += std::conj(w[static_cast<size_t>(i)]) * u.at(i, j) * w[static_cast<size_t>(j)];
        }
        return eval_wpoly(poly, w) * std::exp(-quad + lin + diag);
      };
      QuadOptions opt;
      opt.degree_hint = 20;
      QuadResult res = quad_oracle(f, QuadDomain::gaussian, q, opt);
      REQUIRE(res.used_quadrature);
      REQUIRE(std::abs(res.value - closed) < 1e-6 + 10.0 * res.error);
    }
  }
}

TEST_CASE("quadrature is exact on polynomial moments and reports tiny errors") {
  // z^2 zbar^2 against the gaussian: exactly 2.
  Integrand f = [](std::span<const Cd> w) {
    return w[0] * w[0] * std::conj(w[0]) * std::conj(w[0]);
  };
  QuadResult res = quad_oracle(f, QuadDomain::gaussian, 1);
  REQUIRE(res.used_quadrature);
  REQUIRE(res.converged);
  REQUIRE(std::abs(res.value - Cd(2.0, 0.0)) < 1e-10);
  REQUIRE(std::abs(res.value - Cd(2.0, 0.0)) < 1e-10 + 10.0 * res.error);

  // zeta_1 conj(zeta_1) over the ball in C^2: exactly 1/3!.
  Integrand g = [](std::span<const Cd> w) { return w[0] * std::conj(w[0]); };
  QuadResult br = quad_oracle(g, QuadDomain::ball, 2);
  REQUIRE(br.used_quadrature);
  REQUIRE(std::abs(br.value - Cd(1.0 / 6.0, 0.0)) < 1e-10);
  REQUIRE(br.value.real() == doctest::Approx(ball_moment(MultiIndex{1, 0}, MultiIndex{1, 0}, 2)
                                                 .to_complex()
                                                 .real())
                                 .epsilon(1e-9));
}

TEST_CASE("monte carlo fallback stays within sampling error of exact moments") {
  // Tight budgets force the sampling path; fixed seeds make this
  // deterministic. Bounds are several standard errors wide.
  QuadOptions opt;
  opt.allow_quadrature = false;
  opt.max_evals = 200000;
  opt.target_tol = 1e-12;

  Integrand f = [](std::span<const Cd> w) {
    return w[0] * w[0] * std::conj(w[0]) * std::conj(w[0]);
  };
  QuadResult res = quad_oracle(f, QuadDomain::gaussian, 1, opt);
  REQUIRE_FALSE(res.used_quadrature);
  REQUIRE(res.evals == opt.max_evals);
  REQUIRE(res.error > 0.0);
  REQUIRE(std::abs(res.value - Cd(2.0, 0.0)) < 6.0 * res.error);

  Integrand g = [](std::span<const Cd> w) { return w[0] * std::conj(w[0]); };
  QuadResult br = quad_oracle(g, QuadDomain::ball, 2, opt);
  REQUIRE_FALSE(br.used_quadrature);
  REQUIRE(std::abs(br.value - Cd(1.0 / 6.0, 0.0)) < 6.0 * br.error);

  // A complex-phase integrand exercises both components of the estimate.
  Integrand h = [](std::span<const Cd> w) { return w[0] * std::conj(w[0]) * Cd(0.0, 1.0); };
  QuadResult hr = quad_oracle(h, QuadDomain::gaussian, 1, opt);
  REQUIRE(std::abs(hr.value - Cd(0.0, 1.0)) < 6.0 * hr.error);
}

TEST_CASE("budget below the rule cost falls back to sampling") {
  Integrand f = [](std::span<const Cd> w) { return w[0] * std::conj(w[0]); };
  QuadOptions opt;
  opt.max_evals = 300;  // smaller than the two tensor rules for q = 2
  QuadResult res = quad_oracle(f, QuadDomain::ball, 2, opt);
  REQUIRE_FALSE(res.used_quadrature);
  REQUIRE(res.evals <= opt.max_evals);
}

TEST_CASE("antiholomorphic polynomials are reproduced by the gaussian kernel") {
  // F(v) = Integral F(w) e^{v^* w} e^{-|w|^2} dm(w) for antiholomorphic F.
  Rng rng(442);
  for (int q = 1; q <= 2; ++q) {
    for (int trial = 0; trial < 5; ++trial) {
      WPoly fiber;
      for (int t = 0; t < 3; ++t)
        fiber.push_back({MultiIndex::zeros(q), rng.weighted_tuple(q, rng.int_in(0, 3)),
                         Cd(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0))});
      std::vector<Cd> v = rng.complex_point(q, 0.7);

      Integrand f = [&](std::span<const Cd> w) {
        Cd dot = 0.0;
        for (int j = 0; j < q; ++j)
          dot += std::conj(v[static_cast<size_t>(j)]) * w[static_cast<size_t>(j)];
        return eval_wpoly(fiber, w) * std::exp(dot);
      };
      QuadOptions opt;
      opt.degree_hint = 18;
      QuadResult res = quad_oracle(f, QuadDomain::gaussian, q, opt);
      REQUIRE(res.used_quadrature);
      Cd direct = eval_wpoly(fiber, std::span<const Cd>(v));
      REQUIRE(std::abs(res.value - direct) < 1e-8);
    }
  }
}

TEST_CASE("exact and numeric ball membership agree") {
  Rng rng(443);
  for (int q = 1; q <= 3; ++q) {
    for (int trial = 0; trial < 20; ++trial) {
      auto z = rng.exact_ball_point(q);
      REQUIRE(in_disk(std::span<const ExactComplex>(z)));
      std::vector<std::vector<Cd>> zn(1);
      for (const auto& c : z) zn[0].push_back(c.to_complex());
      REQUIRE(in_disk(zn));
    }
    // A point with |zeta| >= 1 is outside on both paths.
    std::vector<ExactComplex> out(static_cast<size_t>(q), ExactComplex::zero());
    out[0] = ExactComplex::one();
    REQUIRE_FALSE(in_disk(std::span<const ExactComplex>(out)));
    std::vector<std::vector<Cd>> outn(1, std::vector<Cd>(static_cast<size_t>(q), Cd(0.0)));
    outn[0][0] = Cd(1.0, 0.0);
    REQUIRE_FALSE(in_disk(outn));
  }

  // Square matrix case: I - zeta^* zeta must be positive definite.
  std::vector<std::vector<Cd>> inside{{Cd(0.5, 0.0), Cd(0.0, 0.0)},
                                      {Cd(0.0, 0.0), Cd(0.0, 0.6)}};
  std::vector<std::vector<Cd>> outside{{Cd(0.5, 0.0), Cd(0.0, 0.0)},
                                       {Cd(0.0, 0.0), Cd(0.0, 1.1)}};
  REQUIRE(in_disk(inside));
  REQUIRE_FALSE(in_disk(outside));
}

TEST_CASE("rationalizing double coefficients is lossless") {
  Rng rng(444);
  FockPolyF f;
  f.p = 1;
  f.q = 2;
  std::vector<double> values{0.1,       -1.0 / 3.0, 4097.0 / 4096.0, 2.5e10,
                             -7.25e-12, 1e-300,     0.75,            -123456.789};
  int i = 0;
  for (double re : values) {
    f.terms[{MultiIndex{i % 3}, MultiIndex{i % 2, (i + 1) % 2}}] = Cd(re, re / 7.0);
    ++i;
  }
  FockPolyF back = fock_to_float(fock_rationalize(f));
  REQUIRE(back.terms.size() == f.terms.size());
  for (const auto& [key, c] : f.terms) {
    auto it = back.terms.find(key);
    REQUIRE(it != back.terms.end());
    REQUIRE(it->second.real() == c.real());  // bit-exact round trip
    REQUIRE(it->second.imag() == c.imag());
  }

  // float -> exact -> float is idempotent on arbitrary exact data too.
  FockPoly g = rng.pure_grade(1, 2, 1, 6, 6);
  FockPolyF gf = fock_to_float(g);
  FockPolyF gf2 = fock_to_float(fock_rationalize(gf));
  REQUIRE(gf2.terms.size() == gf.terms.size());
  for (const auto& [key, c] : gf.terms) {
    auto it = gf2.terms.find(key);
    REQUIRE(it != gf2.terms.end());
    REQUIRE(it->second.real() == c.real());
    REQUIRE(it->second.imag() == c.imag());
  }

  // Exact zeros are dropped, not stored.
  FockPolyF z;
  z.p = 1;
  z.q = 1;
  z.terms[{MultiIndex{1}, MultiIndex{1}}] = Cd(0.0, 0.0);
  z.terms[{MultiIndex{2}, MultiIndex{0}}] = Cd(0.5, 0.0);
  REQUIRE(fock_rationalize(z).terms.size() == 1);
}
