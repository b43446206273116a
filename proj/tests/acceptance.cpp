// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is either an exact identity or a numeric check
// with an explicit tolerance; nothing depends on test framework machinery.

#include <chrono>
#include <cmath>
#include <complex>
#include <exception>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "ladder/diffops.hpp"
#include "ladder/fock.hpp"
#include "ladder/group.hpp"
#include "ladder/inversion.hpp"
#include "ladder/moments.hpp"
#include "ladder/operators.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/section.hpp"
#include "ladder/transform.hpp"
#include "test_support.hpp"

using namespace ladder;
using ladder::testing::Rng;
using Cd = std::complex<double>;

namespace {

bool note_failure(const std::string& what) {
  std::cout << "      first failure: " << what << "\n";
  return false;
}

// ---------------------------------------------------------------------------
// 1. The worked weight-2 example over the q = 3 ball, exact to the digit.

bool criterion_worked_example() {
  const int q = 3, n = 2;
  MultiIndex nu{1, 3, 1};
  FockPoly f = ball_monomial(q, nu, n);
  DiskSection tf = phi(f);

  DiskSection expected = section_zero(1, q, n);
  section_add_term(expected, {0, 1, 1}, MatrixIndex::from_row({1, 2, 0}), ExactComplex(18));
  section_add_term(expected, {0, 2, 0}, MatrixIndex::from_row({1, 1, 1}), ExactComplex(36));
  section_add_term(expected, {1, 0, 1}, MatrixIndex::from_row({0, 3, 0}), ExactComplex(6));
  section_add_term(expected, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(18));
  if (!(tf == expected)) return note_failure("transform of the worked monomial");
  if (!(phi_ball(q, nu, n) == expected)) return note_failure("closed-form monomial image");
  if (!(phi_serial(f) == expected)) return note_failure("serial transform");

  DiskSection expected_p = section_zero(1, q, n);
  section_add_term(expected_p, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(18));
  if (!(p_op(tf) == expected_p)) return note_failure("highest-weight part");

  DiskSection expected_l = section_zero(1, q, n);
  section_add_term(expected_l, {1, 1, 0}, MatrixIndex::from_row({0, 2, 1}), ExactComplex(6));
  if (!(l_op(tf) == expected_l)) return note_failure("normalized part");

  if (!(pairing(tf, tf) == ExactComplex(36))) return note_failure("self-pairing value");
  if (!(invert(tf) == f)) return note_failure("round trip");
  return true;
}

// ---------------------------------------------------------------------------
// 2. invert(phi(f)) = f, exactly, across the monomial family and random
//    20-term combinations.

bool criterion_round_trip() {
  for (int q = 1; q <= 4; ++q)
    for (int w = 0; w <= 8; ++w)
      for (const MultiIndex& nu : enumerate_weight(w, q))
        for (int n = 0; n <= w; ++n) {
          FockPoly f = ball_monomial(q, nu, n);
          if (!(invert(phi(f)) == f))
            return note_failure("monomial q=" + std::to_string(q) + " nu=" + nu.str() +
                                " n=" + std::to_string(n));
        }

  Rng rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    int q = rng.int_in(1, 4);
    int n = rng.int_in(0, 4);
    FockPoly f = rng.pure_grade(1, q, n, 20, n + 8);
    if (!(invert(phi(f)) == f))
      return note_failure("random combination #" + std::to_string(trial));
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. The section pairing equals the Fock inner product of the preimages.

bool criterion_unitarity() {
  for (int q = 1; q <= 4; ++q)
    for (int w = 0; w <= 8; ++w)
      for (const MultiIndex& nu : enumerate_weight(w, q))
        for (int n = 0; n <= w; ++n) {
          FockPoly f = ball_monomial(q, nu, n);
          DiskSection tf = phi(f);
          ExactComplex lhs = pairing(tf, tf);
          if (!(lhs == fock_inner(f, f)))
            return note_failure("monomial norm q=" + std::to_string(q) + " nu=" + nu.str());
          ExactComplex spot(Integer(nu.factorial() * factorial_int(w - n)));
          if (!(lhs == spot))
            return note_failure("norm spot value q=" + std::to_string(q) + " nu=" + nu.str());
        }

  Rng rng(90311);
  for (int trial = 0; trial < 100; ++trial) {
    int q = rng.int_in(1, 4);
    int n = rng.int_in(0, 3);
    FockPoly f1 = rng.pure_grade(1, q, n, 20, n + 6);
    FockPoly f2 = rng.pure_grade(1, q, n, 20, n + 6);
    if (!(pairing(phi(f1), phi(f2)) == fock_inner(f1, f2)))
      return note_failure("cross pairing #" + std::to_string(trial));
  }
  return true;
}

// ---------------------------------------------------------------------------
// 4. Every 2x2 minor of the operator matrix kills the transform's image.

bool criterion_annihilation() {
  Rng rng(90412);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + trial % 3;
    int n = 1 + (trial / 3) % 3;
    FockPoly f = rng.pure_grade(1, q, n, 6, n + 8);
    DiskSection tf = phi(f);
    for (const MinorSpec& m : all_minors(1, q))
      if (!section_is_zero(apply_minor(tf, m)))
        return note_failure("q=" + std::to_string(q) + " n=" + std::to_string(n) + " trial #" +
                            std::to_string(trial));
  }
  for (int trial = 0; trial < 20; ++trial) {
    int n = trial % 3;
    FockPoly f = rng.pure_grade(2, 2, n, 5, n + 4);
    DiskSection tf = phi(f);
    for (const MinorSpec& m : all_minors(2, 2))
      if (!section_is_zero(apply_minor(tf, m)))
        return note_failure("2x2 matrix-ball trial #" + std::to_string(trial));
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. The highest-weight projection leaves exactly one component, at the
//    greedy lex-max eta under nu.

bool criterion_isolation() {
  for (int q = 1; q <= 3; ++q)
    for (int w = 0; w <= 6; ++w)
      for (const MultiIndex& nu : enumerate_weight(w, q))
        for (int n = 0; n <= w; ++n) {
          DiskSection pf = p_op(phi_ball(q, nu, n));
          MultiIndex top = eta_max(nu, n);
          int live = 0;
          bool at_top = false;
          for (const auto& [eta, psi] : pf.comps)
            if (!zp_is_zero(psi)) {
              ++live;
              at_top = at_top || eta == top;
            }
          if (live != 1 || !at_top)
            return note_failure("q=" + std::to_string(q) + " nu=" + nu.str() +
                                " n=" + std::to_string(n));
        }
  return true;
}

// ---------------------------------------------------------------------------
// 6. The minor kernel at fixed homogeneity has the predicted dimension and
//    the transform reconstructs every basis element.

bool criterion_characterization() {
  for (int q = 2; q <= 3; ++q)
    for (int n = 1; n <= 2; ++n)
      for (int m = 0; m <= 3; ++m) {
        std::vector<DiskSection> basis = minor_kernel_basis(m, n, q);
        if (!(count_weight(m + n, q) == static_cast<long>(basis.size())))
          return note_failure("dimension at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                              " q=" + std::to_string(q));
        for (const DiskSection& b : basis)
          if (!(phi(invert(b)) == b))
            return note_failure("reconstruction at m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " q=" + std::to_string(q));
      }
  return true;
}

// ---------------------------------------------------------------------------
// 7. Closed-form moments against the numeric oracle, plus the reproducing
//    identity of the Gaussian kernel.

bool criterion_moments() {
  // Gaussian moments on C, quadrature path.
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      Integrand f = [k, l](std::span<const Cd> w) {
        Cd acc = 1.0;
        for (int i = 0; i < k; ++i) acc *= w[0];
        for (int i = 0; i < l; ++i) acc *= std::conj(w[0]);
        return acc;
      };
      QuadResult res = quad_oracle(f, QuadDomain::gaussian, 1);
      if (!res.used_quadrature) return note_failure("gaussian rule not engaged");
      if (std::abs(res.value - gaussian_moment_1d(k, l).to_complex()) > 1e-6)
        return note_failure("gaussian moment k=" + std::to_string(k) + " l=" + std::to_string(l));
    }

  // Ball moments: every (eta, gamma) with |eta| + |gamma| <= 4, q <= 3.
  for (int q = 1; q <= 3; ++q)
    for (int we = 0; we <= 4; ++we)
      for (int wg = 0; we + wg <= 4; ++wg)
        for (const MultiIndex& eta : enumerate_weight(we, q))
          for (const MultiIndex& gamma : enumerate_weight(wg, q)) {
            Integrand f = [&](std::span<const Cd> w) {
              Cd acc = 1.0;
              for (int j = 0; j < q; ++j) {
                for (int i = 0; i < eta[j]; ++i) acc *= w[static_cast<size_t>(j)];
                for (int i = 0; i < gamma[j]; ++i) acc *= std::conj(w[static_cast<size_t>(j)]);
              }
              return acc;
            };
            QuadOptions opt;
            opt.degree_hint = we + wg;
            opt.max_evals = 30000000;
            QuadResult res = quad_oracle(f, QuadDomain::ball, q, opt);
            if (!res.used_quadrature) return note_failure("ball rule not engaged");
            if (std::abs(res.value - ball_moment(eta, gamma, q).to_complex()) > 1e-6)
              return note_failure("ball moment q=" + std::to_string(q) + " eta=" + eta.str() +
                                  " gamma=" + gamma.str());
          }

  // Sampling path within 3 estimated standard errors.
  QuadOptions mc;
  mc.allow_quadrature = false;
  mc.max_evals = 400000;
  mc.target_tol = 1e-12;
  mc.seed = 777;
  {
    Integrand f = [](std::span<const Cd> w) { return std::norm(w[0]); };
    QuadResult res = quad_oracle(f, QuadDomain::gaussian, 1, mc);
    if (res.used_quadrature || std::abs(res.value - Cd(1.0, 0.0)) > 3.0 * res.error)
      return note_failure("sampled gaussian moment k=l=1");
  }
  {
    Integrand f = [](std::span<const Cd> w) { return std::norm(w[0]) * std::norm(w[0]); };
    QuadResult res = quad_oracle(f, QuadDomain::gaussian, 1, mc);
    if (std::abs(res.value - Cd(2.0, 0.0)) > 3.0 * res.error)
      return note_failure("sampled gaussian moment k=l=2");
  }
  {
    Integrand f = [](std::span<const Cd> w) { return std::norm(w[0]); };
    QuadResult res = quad_oracle(f, QuadDomain::ball, 2, mc);
    if (res.used_quadrature || std::abs(res.value - Cd(1.0 / 6.0, 0.0)) > 3.0 * res.error)
      return note_failure("sampled ball moment");
  }

  // Reproducing identity: antiholomorphic polynomials are fixed points of
  // integration against e^{v^* w} e^{-|w|^2}.
  Rng rng(90513);
  for (int q = 1; q <= 2; ++q)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<MultiIndex> exps;
      std::vector<Cd> coeffs;
      for (int t = 0; t < 3; ++t) {
        exps.push_back(rng.weighted_tuple(q, rng.int_in(0, 3)));
        coeffs.push_back(Cd(rng.real_in(-1.0, 1.0), rng.real_in(-1.0, 1.0)));
      }
      auto value_at = [&](std::span<const Cd> pt) {
        Cd acc = 0.0;
        for (size_t t = 0; t < exps.size(); ++t) {
          Cd m = coeffs[t];
          for (int j = 0; j < q; ++j)
            for (int i = 0; i < exps[t][j]; ++i) m *= std::conj(pt[static_cast<size_t>(j)]);
          acc += m;
        }
        return acc;
      };
      std::vector<Cd> v = rng.complex_point(q, 0.7);
      Integrand f = [&](std::span<const Cd> w) {
        Cd dot = 0.0;
        for (int j = 0; j < q; ++j)
          dot += std::conj(v[static_cast<size_t>(j)]) * w[static_cast<size_t>(j)];
        return value_at(w) * std::exp(dot);
      };
      QuadOptions opt;
      opt.degree_hint = 18;
      QuadResult res = quad_oracle(f, QuadDomain::gaussian, q, opt);
      if (!res.used_quadrature) return note_failure("reproducing rule not engaged");
      if (std::abs(res.value - value_at(v)) > 1e-8)
        return note_failure("reproducing identity q=" + std::to_string(q));
    }
  return true;
}

// ---------------------------------------------------------------------------
// 8. The group action story: the section action of g matches the transform
//    of the oscillator action of g, pointwise; and the oscillator action
//    preserves norms.

GroupElementX compact_element(int q) {
  CMatX m(1 + q, 1 + q);
  m.at(0, 0) = ExactComplex(rat_frac(3, 5), rat_frac(4, 5));
  if (q == 1) {
    m.at(1, 1) = ExactComplex::i();
  } else {
    m.at(1, 1) = ExactComplex(rat_frac(3, 5));
    m.at(1, 2) = ExactComplex(rat_frac(4, 5));
    m.at(2, 1) = ExactComplex(rat_frac(-4, 5));
    m.at(2, 2) = ExactComplex(rat_frac(3, 5));
    for (int j = 3; j <= q; ++j) m.at(j, j) = ExactComplex(rat_frac(-4, 5), rat_frac(3, 5));
  }
  return {1, q, std::move(m)};
}

GroupElementX boost_element(int q, int j) {
  CMatX m = CMatX::identity(1 + q);
  m.at(0, 0) = ExactComplex(rat_frac(13, 12));
  m.at(j, j) = ExactComplex(rat_frac(13, 12));
  m.at(0, j) = ExactComplex(rat_frac(5, 12));
  m.at(j, 0) = ExactComplex(rat_frac(5, 12));
  return {1, q, std::move(m)};
}

bool criterion_intertwining() {
  Rng rng(90614);

  // Exact path: block-diagonal unitary elements, pointwise at 10 samples.
  for (int q = 1; q <= 3; ++q) {
    GroupElementX k = compact_element(q);
    if (!check_group(k)) return note_failure("compact element not in the group");
    for (int n = 0; n <= 2; ++n) {
      FockPoly f = rng.pure_grade(1, q, n, 4, n + 4);
      DiskSection lhs = phi(sigma_compact(k, f));
      DiskSection tf = phi(f);
      for (int sample = 0; sample < 10; ++sample) {
        std::vector<ExactComplex> zeta = rng.exact_ball_point(q);
        std::vector<ExactComplex> v = rng.exact_ball_point(q);
        ExactComplex want = omega_eval(k, tf, zeta, v);
        ExactComplex got = section_eval(lhs, zeta, v);
        if (std::abs((want - got).to_complex()) > 1e-8)
          return note_failure("exact-path sample q=" + std::to_string(q) +
                              " n=" + std::to_string(n));
      }
    }
  }

  // Numeric path: boosts through the truncated Gaussian expansion.
  for (int q = 1; q <= 2; ++q) {
    GroupElementX g = boost_element(q, q);  // mixes the last slot
    GroupElementF gf = group_to_float(g);
    FockPoly f = rng.pure_grade(1, q, 1, 3, 3);
    FockPolyF sf = sigma_general(gf, f, 31);
    DiskSection lhs = phi(fock_rationalize(sf));
    DiskSection tf = phi(f);
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<Cd> zeta = rng.ball_point(q, 0.35);
      std::vector<Cd> v = rng.complex_point(q, 0.5);
      Cd want = omega_eval(gf, tf, zeta, v);
      Cd got = section_eval(lhs, std::span<const Cd>(zeta), std::span<const Cd>(v));
      if (std::abs(want - got) > 1e-4)
        return note_failure("boost sample q=" + std::to_string(q));
    }

    Cd before = fock_inner(f, f).to_complex();
    Cd after = fock_inner_f(sf, sf);
    if (std::abs(after - before) > 1e-6 * std::max(1.0, std::abs(before)))
      return note_failure("norm preservation q=" + std::to_string(q));
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)();
  double time_limit;  // seconds; 0 = unbounded
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"worked weight-2 example, exact", criterion_worked_example, 1.0},
      {"inversion round trip, monomials and random combinations", criterion_round_trip, 60.0},
      {"pairing matches the Fock inner product", criterion_unitarity, 60.0},
      {"operator minors annihilate transform images", criterion_annihilation, 0.0},
      {"highest-weight isolation", criterion_isolation, 0.0},
      {"minor kernel dimension and reconstruction", criterion_characterization, 0.0},
      {"closed-form moments against the numeric oracle", criterion_moments, 0.0},
      {"group action intertwining and norm preservation", criterion_intertwining, 0.0},
  };

  int passed = 0;
  const int total = static_cast<int>(std::size(criteria));
  for (int i = 0; i < total; ++i) {
    const Criterion& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string blown_up;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      blown_up = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.time_limit > 0.0 && secs > c.time_limit) {
      ok = false;
      blown_up = "exceeded " + std::to_string(c.time_limit) + "s";
    }
    std::cout << "[" << (i + 1) << "/" << total << "] " << (ok ? "PASS" : "FAIL") << "  "
              << c.name << "  (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::defaultfloat << "\n";
    if (!blown_up.empty()) std::cout << "      error: " << blown_up << "\n";
    if (ok) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << total << " criteria passed\n";
  return passed == total ? 0 : 1;
}
