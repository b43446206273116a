#pragma once

#include "ladder/fock.hpp"
#include "ladder/operators.hpp"
#include "ladder/section.hpp"

namespace ladder {

/// Left inverse of the weight-n transform over the unit ball (p = 1).
/// After the highest-weight normalization L, each absolute term
/// c zeta^gamma vbar^eta contributes
///
///   (c / |gamma|!) z_1^{|gamma|} zbar_S^{gamma + eta}
///
/// (the radial q-fold t-derivative of t^{|gamma|+q} at t = 1 cancels the
/// ball moment exactly). Applied to the image of a pure-grade-n polynomial
/// this recovers it on the nose. Requires n >= 0. OpenMP splits the terms
/// of the normalized section when there are many.
FockPoly invert(const DiskSection& s);

/// Single-threaded reference; identical output by exactness.
FockPoly invert_serial(const DiskSection& s);

/// Sesquilinear pairing that makes the transform a unitary onto its image:
/// matching absolute terms c1 zeta^gamma vbar^eta of L(phi1) and
/// c2 zeta^gamma vbar^eta of phi2 contribute
///
///   c1 * conj(c2) * eta! * gamma! / |gamma|!.
///
/// On transforms of pure-grade polynomials this equals the Fock-space
/// inner product of the preimages. Requires matching signatures, p = 1.
ExactComplex pairing(const DiskSection& a, const DiskSection& b);

/// Single-threaded reference; identical output by exactness.
ExactComplex pairing_serial(const DiskSection& a, const DiskSection& b);

/// Exact basis of the space of degree-m homogeneous sections of weight n
/// (p = 1) annihilated by every 2x2 minor of the ball operator matrix.
/// Returned sections have rational coefficients; the count equals the
/// number of length-q exponents of weight m + n.
std::vector<DiskSection> minor_kernel_basis(int m, int n, int q);

}  // namespace ladder
