#include "ladder/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace ladder {

namespace {

using Cd = std::complex<double>;

/// Gauss-Hermite nodes/weights for the weight e^{-x^2} on R: Newton
/// iteration on the recurrence, seeded with the usual asymptotic guesses.
void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<size_t>(n), 0.0);
  w.assign(static_cast<size_t>(n), 0.0);
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[static_cast<size_t>(i - 2)];
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<size_t>(i)] = z;
    x[static_cast<size_t>(n - 1 - i)] = -z;
    w[static_cast<size_t>(i)] = 2.0 / (pp * pp);
    w[static_cast<size_t>(n - 1 - i)] = w[static_cast<size_t>(i)];
  }
}

/// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<size_t>(n), 0.0);
  w.assign(static_cast<size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // map [-1,1] -> [0,1]
    x[static_cast<size_t>(i)] = 0.5 * (1.0 - z);
    x[static_cast<size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    double wi = 2.0 / ((1.0 - z * z) * pp * pp) * 0.5;
    w[static_cast<size_t>(i)] = wi;
    w[static_cast<size_t>(n - 1 - i)] = wi;
  }
}

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1LL << 62) / base) return 1LL << 62;
    r *= base;
  }
  return r;
}

/// Tensor Gauss-Hermite over C^q: each complex coordinate is x + iy with
/// independent e^{-x^2-y^2}/pi weight.
Cd gaussian_quadrature(const Integrand& f, int q, int nodes, long long& evals) {
  std::vector<double> x, w;
  gauss_hermite(nodes, x, w);
  const int axes = 2 * q;
  std::vector<int> idx(static_cast<size_t>(axes), 0);
  std::vector<Cd> pt(static_cast<size_t>(q));
  const double inv_pi_q = std::pow(std::numbers::inv_pi, q);
  Cd acc = 0.0;
  while (true) {
    double weight = 1.0;
    for (int a = 0; a < axes; ++a) weight *= w[static_cast<size_t>(idx[static_cast<size_t>(a)])];
    for (int j = 0; j < q; ++j)
      pt[static_cast<size_t>(j)] = Cd(x[static_cast<size_t>(idx[static_cast<size_t>(2 * j)])],
                                      x[static_cast<size_t>(idx[static_cast<size_t>(2 * j + 1)])]);
    acc += weight * f(pt);
    ++evals;
    int a = 0;
    for (; a < axes; ++a) {
      if (++idx[static_cast<size_t>(a)] < nodes) break;
      idx[static_cast<size_t>(a)] = 0;
    }
    if (a == axes) break;
  }
  return acc * inv_pi_q;
}

/// Tensor rule on the ball via the polar factorization: zeta_j =
/// sqrt(s_j) e^{i theta_j} with s on the simplex {s_j >= 0, sum < 1}
/// (iterated stick-breaking with Gauss-Legendre) and equispaced angles.
Cd ball_quadrature(const Integrand& f, int q, int radial_nodes, int angle_nodes,
                   long long& evals) {
  std::vector<double> x, w;
  gauss_legendre01(radial_nodes, x, w);
  std::vector<int> ridx(static_cast<size_t>(q), 0);
  std::vector<int> aidx(static_cast<size_t>(q), 0);
  std::vector<double> s(static_cast<size_t>(q));
  std::vector<Cd> pt(static_cast<size_t>(q));
  const double two_pi = 2.0 * std::numbers::pi;
  Cd acc = 0.0;

  // Radial outer loop, angular inner loop.
  while (true) {
    // stick-breaking: s_j = u_j * (1 - s_1 - ... - s_{j-1})
    double remaining = 1.0;
    double rweight = 1.0;
    for (int j = 0; j < q; ++j) {
      double u = x[static_cast<size_t>(ridx[static_cast<size_t>(j)])];
      s[static_cast<size_t>(j)] = u * remaining;
      rweight *= w[static_cast<size_t>(ridx[static_cast<size_t>(j)])] * remaining;
      remaining *= (1.0 - u);
    }
    std::fill(aidx.begin(), aidx.end(), 0);
    while (true) {
      for (int j = 0; j < q; ++j) {
        double th = two_pi * (aidx[static_cast<size_t>(j)] + 0.5) / angle_nodes;
        pt[static_cast<size_t>(j)] =
            std::sqrt(s[static_cast<size_t>(j)]) * Cd(std::cos(th), std::sin(th));
      }
      acc += rweight * f(pt);
      ++evals;
      int a = 0;
      for (; a < q; ++a) {
        if (++aidx[static_cast<size_t>(a)] < angle_nodes) break;
        aidx[static_cast<size_t>(a)] = 0;
      }
      if (a == q) break;
    }
    int a = 0;
    for (; a < q; ++a) {
      if (++ridx[static_cast<size_t>(a)] < radial_nodes) break;
      ridx[static_cast<size_t>(a)] = 0;
    }
    if (a == q) break;
  }
  // dm = (2pi)^{-q} prod ds_j dtheta_j on the simplex-times-torus chart;
  // equispaced angles carry weight 2pi/angle_nodes each.
  return acc / std::pow(static_cast<double>(angle_nodes), q);
}

struct McAccum {
  Cd sum{0.0, 0.0};
  double sum_sq = 0.0;  // sum of |f|^2 for the variance estimate
  long long count = 0;

  void add(Cd v) {
    sum += v;
    sum_sq += std::norm(v);
    ++count;
  }
  Cd mean() const { return count ? sum / static_cast<double>(count) : Cd(0.0); }
  double stderr_est() const {
    if (count < 2) return HUGE_VAL;
    double m2 = std::norm(mean());
    double var = std::max(0.0, sum_sq / static_cast<double>(count) - m2);
    return std::sqrt(var / static_cast<double>(count));
  }
};

QuadResult gaussian_mc(const Integrand& f, int q, const QuadOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, std::numbers::sqrt2 / 2.0);  // var 1/2
  McAccum acc;
  std::vector<Cd> pt(static_cast<size_t>(q));
  QuadResult res;
  const long long batch = 10000;
  while (res.evals < opt.max_evals) {
    for (long long i = 0; i < batch && res.evals < opt.max_evals; ++i) {
      for (int j = 0; j < q; ++j) pt[static_cast<size_t>(j)] = Cd(gauss(rng), gauss(rng));
      acc.add(f(pt));
      ++res.evals;
    }
    if (acc.stderr_est() <= opt.target_tol) break;
  }
  res.value = acc.mean();
  res.error = acc.stderr_est();
  res.converged = res.error <= opt.target_tol;
  return res;
}

QuadResult ball_mc(const Integrand& f, int q, const QuadOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  McAccum acc;
  std::vector<Cd> pt(static_cast<size_t>(q));
  QuadResult res;
  double inv_qfac = 1.0;
  for (int j = 2; j <= q; ++j) inv_qfac /= j;
  const long long batch = 10000;
  while (res.evals < opt.max_evals) {
    for (long long i = 0; i < batch && res.evals < opt.max_evals; ++i) {
      // Uniform on the polydisk, rejected to the ball. Rejected proposals
      // count toward the budget but not toward the sample set.
      ++res.evals;
      double norm2 = 0.0;
      for (int j = 0; j < q; ++j) {
        double r = std::sqrt(unif(rng));
        double th = 2.0 * std::numbers::pi * unif(rng);
        pt[static_cast<size_t>(j)] = r * Cd(std::cos(th), std::sin(th));
        norm2 += r * r;
      }
      if (norm2 >= 1.0) continue;
      acc.add(f(pt));
    }
    if (acc.count > 1 && inv_qfac * acc.stderr_est() <= opt.target_tol) break;
  }
  res.value = inv_qfac * acc.mean();
  res.error = acc.count ? inv_qfac * acc.stderr_est() : HUGE_VAL;
  res.converged = res.error <= opt.target_tol;
  return res;
}

}  // namespace

QuadResult quad_oracle(const Integrand& f, QuadDomain domain, int q, const QuadOptions& opt) {
  if (q < 1) throw std::invalid_argument("quad_oracle: bad dimension");
  if (opt.max_evals < 1) throw std::invalid_argument("quad_oracle: empty budget");

  if (opt.allow_quadrature) {
    if (domain == QuadDomain::gaussian) {
      // Gauss-Hermite with n nodes resolves degree 2n-1 per real axis.
      int nodes = std::max(4, opt.degree_hint + 2);
      long long coarse_cost = ipow(nodes, 2 * q);
      long long fine_cost = ipow(nodes + 2, 2 * q);
      if (coarse_cost + fine_cost <= opt.max_evals) {
        QuadResult res;
        res.used_quadrature = true;
        Cd coarse = gaussian_quadrature(f, q, nodes, res.evals);
        Cd fine = gaussian_quadrature(f, q, nodes + 2, res.evals);
        res.value = fine;
        res.error = std::abs(fine - coarse);
        res.converged = res.error <= opt.target_tol;
        return res;
      }
    } else {
      int radial = std::max(4, opt.degree_hint + 2);
      int angles = std::max(6, 2 * opt.degree_hint + 2);
      long long coarse_cost = ipow(static_cast<long long>(radial) * angles, q);
      long long fine_cost = ipow(static_cast<long long>(radial + 2) * (angles + 2), q);
      if (coarse_cost + fine_cost <= opt.max_evals) {
        QuadResult res;
        res.used_quadrature = true;
        Cd coarse = ball_quadrature(f, q, radial, angles, res.evals);
        Cd fine = ball_quadrature(f, q, radial + 2, angles + 2, res.evals);
        res.value = fine;
        res.error = std::abs(fine - coarse);
        res.converged = res.error <= opt.target_tol;
        return res;
      }
    }
  }

  return domain == QuadDomain::gaussian ? gaussian_mc(f, q, opt) : ball_mc(f, q, opt);
}

}  // namespace ladder
