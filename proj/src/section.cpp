#include "ladder/section.hpp"

#include <cmath>

namespace ladder {

void zp_add(ZetaPoly& poly, const MatrixIndex& gamma, const ExactComplex& c) {
  if (c.is_zero()) return;
  auto it = poly.find(gamma);
  if (it == poly.end()) {
    poly.emplace(gamma, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) poly.erase(it);
  }
}

ZetaPoly zp_scale(const ZetaPoly& poly, const ExactComplex& c) {
  ZetaPoly r;
  if (c.is_zero()) return r;
  for (const auto& [g, v] : poly) r.emplace(g, v * c);
  return r;
}

bool zp_is_zero(const ZetaPoly& poly) { return poly.empty(); }

DiskSection section_zero(int p, int q, int n) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("section_zero: bad signature");
  return DiskSection{p, q, n, {}};
}

void section_add_term(DiskSection& s, const MultiIndex& eta, const MatrixIndex& gamma,
                      const ExactComplex& c) {
  if (eta.size() != s.q || gamma.rows() != s.p || gamma.cols() != s.q)
    throw std::invalid_argument("section_add_term: exponent shape mismatch");
  if (eta.order() != s.n)
    throw std::invalid_argument("section_add_term: component weight != n");
  if (c.is_zero()) return;
  ZetaPoly& poly = s.comps[eta];
  zp_add(poly, gamma, c);
  if (poly.empty()) s.comps.erase(eta);
}

DiskSection section_add(const DiskSection& a, const DiskSection& b) {
  if (a.p != b.p || a.q != b.q || a.n != b.n)
    throw std::invalid_argument("section_add: signature mismatch");
  DiskSection r = a;
  for (const auto& [eta, poly] : b.comps)
    for (const auto& [gamma, c] : poly) section_add_term(r, eta, gamma, c);
  return r;
}

DiskSection section_scale(const DiskSection& a, const ExactComplex& c) {
  DiskSection r{a.p, a.q, a.n, {}};
  if (c.is_zero()) return r;
  for (const auto& [eta, poly] : a.comps) r.comps.emplace(eta, zp_scale(poly, c));
  return r;
}

bool section_is_zero(const DiskSection& s) { return s.comps.empty(); }

std::vector<std::pair<MultiIndex, const ZetaPoly*>> components(const DiskSection& s) {
  std::vector<std::pair<MultiIndex, const ZetaPoly*>> out;
  out.reserve(s.comps.size());
  for (const auto& [eta, poly] : s.comps) out.emplace_back(eta, &poly);
  return out;
}

void section_validate(const DiskSection& s) {
  if (s.p <= 0 || s.q <= 0) throw std::invalid_argument("section_validate: bad signature");
  for (const auto& [eta, poly] : s.comps) {
    if (eta.size() != s.q) throw std::invalid_argument("section_validate: eta length");
    if (eta.order() != s.n) throw std::invalid_argument("section_validate: |eta| != n");
    if (poly.empty()) throw std::invalid_argument("section_validate: stored zero component");
    for (const auto& [gamma, c] : poly) {
      if (gamma.rows() != s.p || gamma.cols() != s.q)
        throw std::invalid_argument("section_validate: gamma shape");
      if (c.is_zero()) throw std::invalid_argument("section_validate: stored zero coefficient");
    }
  }
}

bool in_disk(std::span<const ExactComplex> zeta_row) {
  Rational s(0);
  for (const auto& z : zeta_row) s += z.norm_sq();
  return s < 1;
}

namespace {

/// Cholesky test: returns true iff the Hermitian matrix (row-major, size q)
/// is positive definite.
bool cholesky_pd(std::vector<std::complex<double>> a, int q) {
  for (int k = 0; k < q; ++k) {
    double d = a[static_cast<size_t>(k) * q + k].real();
    for (int j = 0; j < k; ++j) d -= std::norm(a[static_cast<size_t>(k) * q + j]);
    if (!(d > 0.0)) return false;
    double rd = std::sqrt(d);
    a[static_cast<size_t>(k) * q + k] = rd;
    for (int i = k + 1; i < q; ++i) {
      std::complex<double> v = a[static_cast<size_t>(i) * q + k];
      for (int j = 0; j < k; ++j)
        v -= a[static_cast<size_t>(i) * q + j] * std::conj(a[static_cast<size_t>(k) * q + j]);
      a[static_cast<size_t>(i) * q + k] = v / rd;
    }
  }
  return true;
}

}  // namespace

bool in_disk(const std::vector<std::vector<std::complex<double>>>& zeta, double tol) {
  if (zeta.empty() || zeta[0].empty()) throw std::invalid_argument("in_disk: empty matrix");
  const int p = static_cast<int>(zeta.size());
  const int q = static_cast<int>(zeta[0].size());
  for (const auto& row : zeta)
    if (static_cast<int>(row.size()) != q) throw std::invalid_argument("in_disk: ragged matrix");
  // m = I - zeta^* zeta - tol*I, Hermitian q x q.
  std::vector<std::complex<double>> m(static_cast<size_t>(q) * q, 0.0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < p; ++k)
        acc += std::conj(zeta[static_cast<size_t>(k)][static_cast<size_t>(i)]) *
               zeta[static_cast<size_t>(k)][static_cast<size_t>(j)];
      std::complex<double> v = -acc;
      if (i == j) v += 1.0 - tol;
      m[static_cast<size_t>(i) * q + j] = v;
    }
  return cholesky_pd(std::move(m), q);
}

namespace {

template <class S, class Conv, class Conj>
S section_eval_impl(const DiskSection& s, std::span<const S> zeta, std::span<const S> v,
                    S zero, S one, Conv conv, Conj conjf) {
  if (static_cast<int>(zeta.size()) != s.p * s.q)
    throw std::invalid_argument("section_eval: zeta dimension mismatch");
  if (static_cast<int>(v.size()) != s.q)
    throw std::invalid_argument("section_eval: v dimension mismatch");
  S acc = zero;
  for (const auto& [eta, poly] : s.comps) {
    S zpart = zero;
    for (const auto& [gamma, c] : poly) {
      S t = conv(c);
      for (int i = 0; i < s.p; ++i)
        for (int j = 0; j < s.q; ++j)
          for (int e = 0; e < gamma.at(i, j); ++e)
            t *= zeta[static_cast<size_t>(i) * s.q + j];
      zpart += t;
    }
    S vpart = one;
    for (int j = 0; j < s.q; ++j) {
      S vb = conjf(v[static_cast<size_t>(j)]);
      for (int e = 0; e < eta[j]; ++e) vpart *= vb;
    }
    acc += zpart * vpart * conv(ExactComplex(Rational(1, eta.factorial())));
  }
  return acc;
}

}  // namespace

ExactComplex section_eval(const DiskSection& s, std::span<const ExactComplex> zeta,
                          std::span<const ExactComplex> v) {
  return section_eval_impl<ExactComplex>(
      s, zeta, v, ExactComplex::zero(), ExactComplex::one(),
      [](const ExactComplex& c) { return c; }, [](const ExactComplex& z) { return z.conj(); });
}

std::complex<double> section_eval(const DiskSection& s,
                                  std::span<const std::complex<double>> zeta,
                                  std::span<const std::complex<double>> v) {
  return section_eval_impl<std::complex<double>>(
      s, zeta, v, 0.0, 1.0, [](const ExactComplex& c) { return c.to_complex(); },
      [](const std::complex<double>& z) { return std::conj(z); });
}

ExactComplex zp_eval(const ZetaPoly& poly, int p, int q, std::span<const ExactComplex> zeta) {
  if (static_cast<int>(zeta.size()) != p * q)
    throw std::invalid_argument("zp_eval: zeta dimension mismatch");
  ExactComplex acc;
  for (const auto& [gamma, c] : poly) {
    ExactComplex t = c;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j)
        for (int e = 0; e < gamma.at(i, j); ++e) t *= zeta[static_cast<size_t>(i) * q + j];
    acc += t;
  }
  return acc;
}

std::complex<double> zp_eval(const ZetaPoly& poly, int p, int q,
                             std::span<const std::complex<double>> zeta) {
  if (static_cast<int>(zeta.size()) != p * q)
    throw std::invalid_argument("zp_eval: zeta dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [gamma, c] : poly) {
    std::complex<double> t = c.to_complex();
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j)
        for (int e = 0; e < gamma.at(i, j); ++e) t *= zeta[static_cast<size_t>(i) * q + j];
    acc += t;
  }
  return acc;
}

double grid_norm(const DiskSection& s,
                 const std::vector<std::vector<std::complex<double>>>& grid) {
  double total = 0.0;
  for (const auto& [eta, poly] : s.comps) {
    double sup = 0.0;
    for (const auto& pt : grid) {
      if (static_cast<int>(pt.size()) != s.p * s.q)
        throw std::invalid_argument("grid_norm: grid point dimension mismatch");
      double a = std::abs(zp_eval(poly, s.p, s.q, pt));
      if (a > sup) sup = a;
    }
    total += sup * sup;
  }
  return std::sqrt(total);
}

}  // namespace ladder
