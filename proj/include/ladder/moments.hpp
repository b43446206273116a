#pragma once

#include "ladder/exact.hpp"
#include "ladder/multi_index.hpp"

namespace ladder {

/// Integral of z^k conj(z)^l against e^{-|z|^2} with the normalized area
/// element on C: delta_{kl} k!.
ExactComplex gaussian_moment_1d(int k, int l);

/// Integral of zeta^eta conj(zeta)^gamma over the unit ball in C^q with the
/// normalized volume element: delta_{eta,gamma} eta! / (|eta| + q)!.
ExactComplex ball_moment(const MultiIndex& eta, const MultiIndex& gamma, int q);

}  // namespace ladder
