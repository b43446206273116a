#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "ladder/exact.hpp"
#include "ladder/fock.hpp"
#include "ladder/multi_index.hpp"

namespace ladder {

/// Polynomial in the p x q matrix variable zeta, keyed by matrix exponents.
using ZetaPoly = std::map<MatrixIndex, ExactComplex>;

void zp_add(ZetaPoly& poly, const MatrixIndex& gamma, const ExactComplex& c);
ZetaPoly zp_scale(const ZetaPoly& poly, const ExactComplex& c);
bool zp_is_zero(const ZetaPoly& poly);

/// Section of the weight-n bundle over the matrix unit ball:
///
///   phi(zeta, v) = Sum_eta psi^(eta)(zeta) vbar^eta / eta!
///
/// Components are stored WITHOUT the 1/eta! normalization; evaluation and
/// printing reinstate it. Keys satisfy |eta| = n; zero polynomials are
/// never stored. A zero section may carry any n tag (including a negative
/// one, where the bundle has no sections at all).
struct DiskSection {
  int p = 1;
  int q = 1;
  int n = 0;

  std::map<MultiIndex, ZetaPoly> comps;

  friend bool operator==(const DiskSection&, const DiskSection&) = default;
};

DiskSection section_zero(int p, int q, int n);
void section_add_term(DiskSection& s, const MultiIndex& eta, const MatrixIndex& gamma,
                      const ExactComplex& c);
DiskSection section_add(const DiskSection& a, const DiskSection& b);
DiskSection section_scale(const DiskSection& a, const ExactComplex& c);
bool section_is_zero(const DiskSection& s);

/// Ordered (lex increasing in eta) view of the stored components.
std::vector<std::pair<MultiIndex, const ZetaPoly*>> components(const DiskSection& s);

/// Structural sanity: key lengths, |eta| = n, no stored zeros, entries >= 0.
void section_validate(const DiskSection& s);

/// Membership in the matrix unit ball. Exact test |zeta|^2 < 1 for p = 1;
/// numeric test for general p: I - zeta^* zeta positive definite with margin
/// tol (Cholesky of I - zeta^* zeta - tol*I succeeds iff every eigenvalue
/// of I - zeta^* zeta exceeds tol).
bool in_disk(std::span<const ExactComplex> zeta_row);
bool in_disk(const std::vector<std::vector<std::complex<double>>>& zeta, double tol = 1e-12);

/// Evaluate phi(zeta, v) = Sum psi^(eta)(zeta) conj(v)^eta / eta!, exact.
/// zeta is row-major p x q, v has length q.
ExactComplex section_eval(const DiskSection& s, std::span<const ExactComplex> zeta,
                          std::span<const ExactComplex> v);

/// Same, double precision (coefficients converted).
std::complex<double> section_eval(const DiskSection& s,
                                  std::span<const std::complex<double>> zeta,
                                  std::span<const std::complex<double>> v);

/// Evaluate one zeta-polynomial exactly.
ExactComplex zp_eval(const ZetaPoly& poly, int p, int q, std::span<const ExactComplex> zeta);
std::complex<double> zp_eval(const ZetaPoly& poly, int p, int q,
                             std::span<const std::complex<double>> zeta);

/// Finite-grid surrogate of the section sup-norm:
///   ||phi||_A^2 = Sum_eta (sup_{zeta in A} |psi^(eta)(zeta)|)^2.
/// The grid is a list of row-major p x q points.
double grid_norm(const DiskSection& s,
                 const std::vector<std::vector<std::complex<double>>>& grid);

}  // namespace ladder
