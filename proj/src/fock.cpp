#include "ladder/fock.hpp"

#include <cmath>

namespace ladder {

namespace {

void require_shape(const FockPoly& f, const FockKey& key, const char* who) {
  if (key.l.size() != f.p || key.m.size() != f.q)
    throw std::invalid_argument(std::string(who) + ": exponent length mismatch");
}

void require_same_signature(int pa, int qa, int pb, int qb, const char* who) {
  if (pa != pb || qa != qb)
    throw std::invalid_argument(std::string(who) + ": signature mismatch");
}

}  // namespace

void fock_add_term(FockPoly& f, const FockKey& key, const ExactComplex& c) {
  require_shape(f, key, "fock_add_term");
  if (c.is_zero()) return;
  auto it = f.terms.find(key);
  if (it == f.terms.end()) {
    f.terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) f.terms.erase(it);
  }
}

FockPoly fock_add(const FockPoly& a, const FockPoly& b) {
  require_same_signature(a.p, a.q, b.p, b.q, "fock_add");
  FockPoly r = a;
  for (const auto& [k, c] : b.terms) fock_add_term(r, k, c);
  return r;
}

FockPoly fock_scale(const FockPoly& a, const ExactComplex& c) {
  FockPoly r{a.p, a.q, {}};
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms) r.terms.emplace(k, v * c);
  return r;
}

FockPoly fock_monomial(int p, int q, const MultiIndex& alpha, const MultiIndex& beta,
                       const ExactComplex& a) {
  if (alpha.size() != p || beta.size() != q)
    throw std::invalid_argument("fock_monomial: exponent length mismatch");
  FockPoly f{p, q, {}};
  fock_add_term(f, {alpha, beta}, a);
  return f;
}

FockPoly ball_monomial(int q, const MultiIndex& nu, int n) {
  if (nu.size() != q) throw std::invalid_argument("ball_monomial: exponent length mismatch");
  if (n < 0 || nu.order() < n)
    throw std::invalid_argument("ball_monomial: requires |nu| >= n >= 0");
  return fock_monomial(1, q, MultiIndex{nu.order() - n}, nu);
}

ExactComplex fock_inner(const FockPoly& f, const FockPoly& g) {
  require_same_signature(f.p, f.q, g.p, g.q, "fock_inner");
  ExactComplex acc;
  // Iterate over the smaller support.
  const FockPoly& small = f.terms.size() <= g.terms.size() ? f : g;
  const FockPoly& large = f.terms.size() <= g.terms.size() ? g : f;
  const bool swapped = &small == &g;
  for (const auto& [k, c] : small.terms) {
    auto it = large.terms.find(k);
    if (it == large.terms.end()) continue;
    ExactComplex a = swapped ? it->second : c;
    ExactComplex b = swapped ? c : it->second;
    Rational w(k.l.factorial() * k.m.factorial());
    acc += a * b.conj() * w;
  }
  return acc;
}

std::complex<double> fock_inner_f(const FockPolyF& f, const FockPolyF& g) {
  require_same_signature(f.p, f.q, g.p, g.q, "fock_inner_f");
  std::complex<double> acc = 0.0;
  for (const auto& [k, c] : f.terms) {
    auto it = g.terms.find(k);
    if (it == g.terms.end()) continue;
    double w = Rational(k.l.factorial() * k.m.factorial()).get_d();
    acc += c * std::conj(it->second) * w;
  }
  return acc;
}

Grade grade(const FockPoly& f) {
  if (f.terms.empty()) return {Grade::Kind::any, 0};
  bool first = true;
  int n = 0;
  for (const auto& [k, c] : f.terms) {
    int d = k.m.order() - k.l.order();
    if (first) {
      n = d;
      first = false;
    } else if (d != n) {
      return {Grade::Kind::mixed, 0};
    }
  }
  return {Grade::Kind::pure, n};
}

namespace {

template <class S>
S eval_impl(const FockPoly& f, std::span<const S> zR, std::span<const S> zS, S zero,
            S (*conv)(const ExactComplex&), S (*conjf)(const S&)) {
  if (static_cast<int>(zR.size()) != f.p || static_cast<int>(zS.size()) != f.q)
    throw std::invalid_argument("fock_eval: point dimension mismatch");
  S acc = zero;
  for (const auto& [k, c] : f.terms) {
    S t = conv(c);
    for (int i = 0; i < f.p; ++i)
      for (int e = 0; e < k.l[i]; ++e) t *= zR[static_cast<size_t>(i)];
    for (int j = 0; j < f.q; ++j) {
      S zb = conjf(zS[static_cast<size_t>(j)]);
      for (int e = 0; e < k.m[j]; ++e) t *= zb;
    }
    acc += t;
  }
  return acc;
}

ExactComplex conv_exact(const ExactComplex& c) { return c; }
ExactComplex conj_exact(const ExactComplex& z) { return z.conj(); }
std::complex<double> conv_dbl(const ExactComplex& c) { return c.to_complex(); }
std::complex<double> conj_dbl(const std::complex<double>& z) { return std::conj(z); }

}  // namespace

ExactComplex fock_eval(const FockPoly& f, std::span<const ExactComplex> zR,
                       std::span<const ExactComplex> zS) {
  return eval_impl<ExactComplex>(f, zR, zS, ExactComplex::zero(), conv_exact, conj_exact);
}

std::complex<double> fock_eval(const FockPoly& f, std::span<const std::complex<double>> zR,
                               std::span<const std::complex<double>> zS) {
  return eval_impl<std::complex<double>>(f, zR, zS, 0.0, conv_dbl, conj_dbl);
}

std::complex<double> fock_eval(const FockPolyF& f, std::span<const std::complex<double>> zR,
                               std::span<const std::complex<double>> zS) {
  if (static_cast<int>(zR.size()) != f.p || static_cast<int>(zS.size()) != f.q)
    throw std::invalid_argument("fock_eval: point dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [k, c] : f.terms) {
    std::complex<double> t = c;
    for (int i = 0; i < f.p; ++i)
      for (int e = 0; e < k.l[i]; ++e) t *= zR[static_cast<size_t>(i)];
    for (int j = 0; j < f.q; ++j) {
      std::complex<double> zb = std::conj(zS[static_cast<size_t>(j)]);
      for (int e = 0; e < k.m[j]; ++e) t *= zb;
    }
    acc += t;
  }
  return acc;
}

FockPolyF fock_to_float(const FockPoly& f) {
  FockPolyF r{f.p, f.q, {}};
  for (const auto& [k, c] : f.terms) r.terms.emplace(k, c.to_complex());
  return r;
}

FockPoly fock_rationalize(const FockPolyF& f) {
  FockPoly r{f.p, f.q, {}};
  for (const auto& [k, c] : f.terms) {
    if (c == std::complex<double>(0.0)) continue;
    // mpq_class(double) is exact: doubles are dyadic rationals.
    r.terms.emplace(k, ExactComplex(Rational(c.real()), Rational(c.imag())));
  }
  return r;
}

FockPolyF fock_trim(const FockPolyF& f, double eps) {
  FockPolyF r{f.p, f.q, {}};
  for (const auto& [k, c] : f.terms)
    if (std::abs(c) > eps) r.terms.emplace(k, c);
  return r;
}

}  // namespace ladder
