#pragma once

#include <complex>
#include <span>

#include "ladder/fock.hpp"
#include "ladder/linalg.hpp"
#include "ladder/section.hpp"

namespace ladder {

/// Element of the indefinite unitary group of signature (p, q), stored as
/// its full (p+q) x (p+q) matrix in the block form [[A, B], [C, D]] with
/// A of size p x p and D of size q x q. The defining relation is
/// g^* J g = J for J = diag(I_p, -I_q). Exact entries for the exact path,
/// doubles for the numeric path.
template <class T>
struct GroupElement {
  int p = 1;
  int q = 1;
  CMat<T> mat;

  CMat<T> blockA() const { return mat.block(0, 0, p, p); }
  CMat<T> blockB() const { return mat.block(0, p, p, q); }
  CMat<T> blockC() const { return mat.block(p, 0, q, p); }
  CMat<T> blockD() const { return mat.block(p, p, q, q); }
};

using GroupElementX = GroupElement<ExactComplex>;
using GroupElementF = GroupElement<std::complex<double>>;

/// Exact membership test g^* J g = J.
bool check_group(const GroupElementX& g);
/// Numeric membership test, max-entry deviation at most tol.
bool check_group(const GroupElementF& g, double tol = 1e-10);

/// g^{-1} = J g^* J, valid on the group (cheap and exact).
GroupElementX group_inverse(const GroupElementX& g);
GroupElementF group_inverse(const GroupElementF& g);

/// Fractional-linear action on the matrix ball:
/// g . zeta = (A zeta + B)(C zeta + D)^{-1}. Throws when C zeta + D is
/// singular (never on the group for zeta inside the ball).
CMatX mobius(const GroupElementX& g, const CMatX& zeta);
CMatD mobius(const GroupElementF& g, const CMatD& zeta);

/// Weight-n fiber automorphy factor applied to a fiber vector F (an
/// antiholomorphic polynomial, absolute coefficients on vbar^eta):
///
///   [J(g, zeta) F](v) = det(C zeta + D) * F((C zeta + D)^* v).
///
/// Exposed for tests; orientation fixed by the cocycle
/// J(g1 g2, zeta) = J(g1, g2.zeta) J(g2, zeta).
std::map<MultiIndex, ExactComplex> multiplier(const GroupElementX& g, const CMatX& zeta,
                                              const std::map<MultiIndex, ExactComplex>& fiber,
                                              int n);

/// Pointwise value of the weight-n action on sections,
///
///   (w_n(g) phi)(zeta, v) = [J(g^{-1}, zeta)^{-1} phi(g^{-1}.zeta, . )](v),
///
/// realized through the cocycle identity J(g^{-1}, zeta)^{-1} =
/// J(g, g^{-1}.zeta). zeta is row-major p x q, v has length q.
ExactComplex omega_eval(const GroupElementX& g, const DiskSection& s,
                        std::span<const ExactComplex> zeta, std::span<const ExactComplex> v);
std::complex<double> omega_eval(const GroupElementF& g, const DiskSection& s,
                                std::span<const std::complex<double>> zeta,
                                std::span<const std::complex<double>> v);

/// True when g is block diagonal with unitary blocks (exactly, for the
/// exact path): the stabilizer of the origin.
bool is_compact_diag(const GroupElementX& g);

/// Oscillator action of a block-diagonal unitary k = diag(A, D):
///
///   sigma(k) f = det(D) f(A^* z_R, D^* z_S),
///
/// exact on Gaussian-rational inputs. The scalar det(D) is the unique
/// block-diagonal phase under which sigma composes as a homomorphism and
/// the transform intertwines it with the weight-n section action.
FockPoly sigma_compact(const GroupElementX& k, const FockPoly& f);

/// Oscillator action of a general group element through its Gaussian
/// integral: expanding the kernel against f(g^{-1} w) gives a Wick sum
/// with source means linear in z_R resp. conj(z_S) and a bilinear
/// exponential factor exp(conj(z_S)^T V z_R) whose series is truncated at
/// the requested total degree. Coefficient-wise numeric result.
FockPolyF sigma_general(const GroupElementF& g, const FockPoly& f, int max_degree);

GroupElementF group_to_float(const GroupElementX& g);

}  // namespace ladder
