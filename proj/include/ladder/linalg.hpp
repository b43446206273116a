#pragma once

#include <complex>
#include <vector>

#include "ladder/exact.hpp"

namespace ladder {

/// Basis of the rational nullspace of an m x n matrix, via reduced row
/// echelon form. Exact; one basis vector per free column, with a 1 in the
/// free slot (the usual RREF parameterization).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, int ncols);

namespace detail {

inline double pivot_weight(const ExactComplex& z) { return std::abs(z.to_complex()); }
inline double pivot_weight(const std::complex<double>& z) { return std::abs(z); }

inline bool exactly_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool exactly_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

inline ExactComplex conj_of(const ExactComplex& z) { return z.conj(); }
inline std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }

inline ExactComplex one_of(const ExactComplex&) { return ExactComplex::one(); }
inline std::complex<double> one_of(const std::complex<double>&) { return {1.0, 0.0}; }

}  // namespace detail

/// Minimal dense matrix over a complex field scalar (exact Gaussian
/// rationals or std::complex<double>). Only the handful of small-matrix
/// operations the group layer needs: products, adjoints, determinants and
/// inverses by Gauss-Jordan with partial pivoting.
template <class T>
class CMat {
 public:
  CMat() = default;
  CMat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("CMat: bad shape");
  }

  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = detail::one_of(T{});
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  CMat operator*(const CMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("CMat: product shape mismatch");
    CMat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& v = at(i, k);
        if (detail::exactly_zero(v)) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
      }
    return m;
  }

  CMat operator+(const CMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("CMat: sum shape mismatch");
    CMat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  CMat operator-(const CMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("CMat: diff shape mismatch");
    CMat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  /// Conjugate transpose.
  CMat adjoint() const {
    CMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = detail::conj_of(at(i, j));
    return m;
  }

  CMat block(int i0, int j0, int r, int c) const {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
  }

  void put_block(int i0, int j0, const CMat& b) {
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }

  /// Determinant by elimination with partial pivoting. Exact scalars use
  /// the pivot weight only to pick well-conditioned pivots; the arithmetic
  /// itself never rounds.
  T det() const {
    if (r_ != c_) throw std::invalid_argument("CMat::det: not square");
    CMat m = *this;
    T result = detail::one_of(T{});
    bool negate = false;
    for (int k = 0; k < r_; ++k) {
      int piv = -1;
      double best = 0.0;
      for (int i = k; i < r_; ++i) {
        double w = detail::pivot_weight(m.at(i, k));
        if (!detail::exactly_zero(m.at(i, k)) && (piv < 0 || w > best)) {
          piv = i;
          best = w;
        }
      }
      if (piv < 0) return T{};
      if (piv != k) {
        for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(k, j));
        negate = !negate;
      }
      result = result * m.at(k, k);
      for (int i = k + 1; i < r_; ++i) {
        if (detail::exactly_zero(m.at(i, k))) continue;
        T f = m.at(i, k) / m.at(k, k);
        for (int j = k; j < c_; ++j) m.at(i, j) -= f * m.at(k, j);
      }
    }
    if (negate) result = T{} - result;
    return result;
  }

  /// Inverse by Gauss-Jordan; throws std::invalid_argument when singular
  /// (exactly singular for exact scalars, zero pivot for doubles).
  CMat inverse() const {
    if (r_ != c_) throw std::invalid_argument("CMat::inverse: not square");
    CMat m = *this;
    CMat inv = identity(r_);
    for (int k = 0; k < r_; ++k) {
      int piv = -1;
      double best = 0.0;
      for (int i = k; i < r_; ++i) {
        double w = detail::pivot_weight(m.at(i, k));
        if (!detail::exactly_zero(m.at(i, k)) && (piv < 0 || w > best)) {
          piv = i;
          best = w;
        }
      }
      if (piv < 0) throw std::invalid_argument("CMat::inverse: singular matrix");
      if (piv != k)
        for (int j = 0; j < c_; ++j) {
          std::swap(m.at(piv, j), m.at(k, j));
          std::swap(inv.at(piv, j), inv.at(k, j));
        }
      T d = m.at(k, k);
      for (int j = 0; j < c_; ++j) {
        m.at(k, j) = m.at(k, j) / d;
        inv.at(k, j) = inv.at(k, j) / d;
      }
      for (int i = 0; i < r_; ++i) {
        if (i == k || detail::exactly_zero(m.at(i, k))) continue;
        T f = m.at(i, k);
        for (int j = 0; j < c_; ++j) {
          m.at(i, j) -= f * m.at(k, j);
          inv.at(i, j) -= f * inv.at(k, j);
        }
      }
    }
    return inv;
  }

  double max_abs() const {
    double m = 0.0;
    for (const T& v : a_) m = std::max(m, detail::pivot_weight(v));
    return m;
  }

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using CMatX = CMat<ExactComplex>;
using CMatD = CMat<std::complex<double>>;

CMatD to_double(const CMatX& m);

}  // namespace ladder
