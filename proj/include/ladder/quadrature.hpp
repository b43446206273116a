#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace ladder {

enum class QuadDomain {
  gaussian,  // C^q against e^{-|w|^2} with the normalized volume element
  ball       // unit ball of C^q with the normalized volume element
};

struct QuadOptions {
  long long max_evals = 4'000'000;
  double target_tol = 1e-8;   // convergence goal for the error estimate
  int degree_hint = 12;       // max monomial degree the rule should resolve
  std::uint64_t seed = 12345; // Monte Carlo stream seed (reproducible)
  bool allow_quadrature = true;  // force Monte Carlo when false
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;      // rule difference (quadrature) or one standard error (MC)
  long long evals = 0;
  bool used_quadrature = false;
  bool converged = false;  // error <= target_tol
};

using Integrand = std::function<std::complex<double>(std::span<const std::complex<double>>)>;

/// Numeric cross-check oracle. Tensor quadrature (Gauss-Hermite for the
/// gaussian domain; radial simplex Gauss-Legendre times equispaced angles
/// for the ball) when the node budget allows, otherwise seeded Monte Carlo
/// (gaussian sampling resp. polydisk rejection). Never used on the exact
/// path; everything here is validation-only.
QuadResult quad_oracle(const Integrand& f, QuadDomain domain, int q,
                       const QuadOptions& opt = {});

}  // namespace ladder
