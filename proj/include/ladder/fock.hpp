#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "ladder/exact.hpp"
#include "ladder/multi_index.hpp"

namespace ladder {

/// Monomial exponent pair: z_R^l zbar_S^m with l of length p (holomorphic
/// slots) and m of length q (antiholomorphic slots).
struct FockKey {
  MultiIndex l;
  MultiIndex m;
  friend bool operator==(const FockKey&, const FockKey&) = default;
  friend auto operator<=>(const FockKey&, const FockKey&) = default;
};

/// Polynomial Sum a_{l,m} z_R^l zbar_S^m with exact Gaussian-rational
/// coefficients. Zero coefficients are never stored.
struct FockPoly {
  int p = 1;
  int q = 1;
  std::map<FockKey, ExactComplex> terms;

  friend bool operator==(const FockPoly&, const FockPoly&) = default;
};

/// Same shape with double-precision coefficients, for the numeric path.
struct FockPolyF {
  int p = 1;
  int q = 1;
  std::map<FockKey, std::complex<double>> terms;
};

void fock_add_term(FockPoly& f, const FockKey& key, const ExactComplex& c);
FockPoly fock_add(const FockPoly& a, const FockPoly& b);
FockPoly fock_scale(const FockPoly& a, const ExactComplex& c);

/// Single monomial a * z_R^alpha zbar_S^beta.
FockPoly fock_monomial(int p, int q, const MultiIndex& alpha, const MultiIndex& beta,
                       const ExactComplex& a = ExactComplex::one());

/// z_1^{|nu|-n} zbar_S^nu for p = 1; requires |nu| >= n >= 0.
FockPoly ball_monomial(int q, const MultiIndex& nu, int n);

/// <f,g> = Sum a_{l,m} conj(b_{l,m}) l! m!  (monomials are orthogonal with
/// norm^2 = l! m!). Exact; signatures must match.
ExactComplex fock_inner(const FockPoly& f, const FockPoly& g);

/// Same inner product on the numeric type.
std::complex<double> fock_inner_f(const FockPolyF& f, const FockPolyF& g);

struct Grade {
  enum class Kind { pure, mixed, any } kind = Kind::any;
  int n = 0;  // meaningful only when kind == pure
  bool is_pure(int expect) const { return kind == Kind::pure && n == expect; }
};

/// A polynomial has pure grade n when every monomial satisfies |m| - |l| = n.
/// The zero polynomial is compatible with any grade.
Grade grade(const FockPoly& f);

/// Evaluate at a point, exact arguments.
ExactComplex fock_eval(const FockPoly& f, std::span<const ExactComplex> zR,
                       std::span<const ExactComplex> zS);

/// Evaluate at a point, numeric arguments (coefficients converted to double).
std::complex<double> fock_eval(const FockPoly& f, std::span<const std::complex<double>> zR,
                               std::span<const std::complex<double>> zS);

std::complex<double> fock_eval(const FockPolyF& f, std::span<const std::complex<double>> zR,
                               std::span<const std::complex<double>> zS);

FockPolyF fock_to_float(const FockPoly& f);

/// Exact lift of a numeric polynomial: every double is a dyadic rational,
/// so this is lossless.
FockPoly fock_rationalize(const FockPolyF& f);

/// Drop terms with |coefficient| <= eps (cleanup after truncated series).
FockPolyF fock_trim(const FockPolyF& f, double eps);

}  // namespace ladder
