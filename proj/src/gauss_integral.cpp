#include "ladder/gauss_integral.hpp"

#include <cmath>

namespace ladder {

namespace {

using Cd = std::complex<double>;

/// Positive definiteness of the Hermitian part of u (Cholesky test).
bool hermitian_part_pd(const CMatD& u) {
  const int r = u.rows();
  std::vector<Cd> h(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      h[static_cast<size_t>(i) * r + j] = 0.5 * (u.at(i, j) + std::conj(u.at(j, i)));
  for (int k = 0; k < r; ++k) {
    double d = h[static_cast<size_t>(k) * r + k].real();
    for (int j = 0; j < k; ++j) d -= std::norm(h[static_cast<size_t>(k) * r + j]);
    if (!(d > 0.0)) return false;
    double rd = std::sqrt(d);
    h[static_cast<size_t>(k) * r + k] = rd;
    for (int i = k + 1; i < r; ++i) {
      Cd v = h[static_cast<size_t>(i) * r + k];
      for (int j = 0; j < k; ++j)
        v -= h[static_cast<size_t>(i) * r + j] * std::conj(h[static_cast<size_t>(k) * r + j]);
      h[static_cast<size_t>(i) * r + k] = v / rd;
    }
  }
  return true;
}

struct WickContext {
  const CMatD* v;           // U^{-1}
  std::vector<Cd> mean_w;   // U^{-1} b
  std::vector<Cd> mean_wb;  // row vector conj(a)^T U^{-1}
};

/// Sum over pairings: each remaining w_i either takes its mean or contracts
/// with one of the remaining conj(w)_j (multiplicity kappa_j, covariance
/// V_ij); leftover conj(w)_j all take their means.
Cd wick(const WickContext& ctx, std::vector<int>& mu, std::vector<int>& kappa) {
  const int r = static_cast<int>(mu.size());
  int i = -1;
  for (int k = 0; k < r; ++k)
    if (mu[static_cast<size_t>(k)] > 0) {
      i = k;
      break;
    }
  if (i < 0) {
    Cd prod = 1.0;
    for (int j = 0; j < r; ++j)
      for (int e = 0; e < kappa[static_cast<size_t>(j)]; ++e)
        prod *= ctx.mean_wb[static_cast<size_t>(j)];
    return prod;
  }
  mu[static_cast<size_t>(i)] -= 1;
  Cd acc = ctx.mean_w[static_cast<size_t>(i)] * wick(ctx, mu, kappa);
  for (int j = 0; j < r; ++j) {
    const int kj = kappa[static_cast<size_t>(j)];
    if (kj == 0) continue;
    kappa[static_cast<size_t>(j)] -= 1;
    acc += static_cast<double>(kj) * ctx.v->at(i, j) * wick(ctx, mu, kappa);
    kappa[static_cast<size_t>(j)] += 1;
  }
  mu[static_cast<size_t>(i)] += 1;
  return acc;
}

}  // namespace

std::complex<double> gaussian_poly_integral(const WPoly& poly, const CMatD& u,
                                            std::span<const std::complex<double>> a,
                                            std::span<const std::complex<double>> b) {
  const int r = u.rows();
  if (u.cols() != r) throw std::invalid_argument("gaussian_poly_integral: U not square");
  if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
    throw std::invalid_argument("gaussian_poly_integral: source length mismatch");
  if (!hermitian_part_pd(u))
    throw std::invalid_argument("gaussian_poly_integral: U + U^* not positive definite");

  WickContext ctx;
  CMatD v = u.inverse();
  ctx.v = &v;
  ctx.mean_w.assign(static_cast<size_t>(r), 0.0);
  ctx.mean_wb.assign(static_cast<size_t>(r), 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      ctx.mean_w[static_cast<size_t>(i)] += v.at(i, j) * b[static_cast<size_t>(j)];
      ctx.mean_wb[static_cast<size_t>(j)] += std::conj(a[static_cast<size_t>(i)]) * v.at(i, j);
    }

  // Z = exp(conj(a)^T V b) / det U.
  Cd quad = 0.0;
  for (int j = 0; j < r; ++j) quad += ctx.mean_wb[static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
  Cd z = std::exp(quad) / u.det();

  Cd acc = 0.0;
  for (const WTerm& t : poly) {
    if (t.w_exp.size() != r || t.wbar_exp.size() != r)
      throw std::invalid_argument("gaussian_poly_integral: term exponent length mismatch");
    std::vector<int> mu(t.w_exp.entries());
    std::vector<int> kappa(t.wbar_exp.entries());
    acc += t.coeff * wick(ctx, mu, kappa);
  }
  return z * acc;
}

}  // namespace ladder
