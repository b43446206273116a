#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ladder/linalg.hpp"
#include "ladder/multi_index.hpp"

namespace ladder {

/// One monomial coeff * w^w_exp * conj(w)^wbar_exp of a polynomial in w
/// and conj(w) over C^r.
struct WTerm {
  MultiIndex w_exp;
  MultiIndex wbar_exp;
  std::complex<double> coeff;
};

using WPoly = std::vector<WTerm>;

/// Integral over C^r with the normalized volume element of
///
///   P(w, conj(w)) * exp(-w^* U w + a^* w + w^* b),
///
/// for U with U + U^* positive definite. Closed form via the source
/// generating function exp(a^* U^{-1} b) / det U and Wick pairing:
/// each w factor either takes its source mean (U^{-1} b) or contracts
/// against a conj(w) factor with covariance U^{-1}; leftover conj(w)
/// factors take the mean U^{-T} conj(a). No sampling involved.
std::complex<double> gaussian_poly_integral(const WPoly& poly, const CMatD& u,
                                            std::span<const std::complex<double>> a,
                                            std::span<const std::complex<double>> b);

}  // namespace ladder
