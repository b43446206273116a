#include "ladder/group.hpp"

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ladder {

namespace {

template <class T>
CMat<T> jmat(int p, int q) {
  CMat<T> j(p + q, p + q);
  for (int i = 0; i < p; ++i) j.at(i, i) = detail::one_of(T{});
  for (int i = p; i < p + q; ++i) j.at(i, i) = T{} - detail::one_of(T{});
  return j;
}

template <class T>
void require_shape(const GroupElement<T>& g) {
  if (g.p < 1 || g.q < 1) throw std::invalid_argument("group element: bad signature");
  if (g.mat.rows() != g.p + g.q || g.mat.cols() != g.p + g.q)
    throw std::invalid_argument("group element: matrix shape does not match signature");
}

template <class T>
T powi(const T& base, int e) {
  T r = detail::one_of(T{});
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

/// Multiply a polynomial keyed by exponent vectors with a linear form in
/// the same variables: poly * (Sum_i form[i] X_i).
template <class C>
std::map<MultiIndex, C> mul_linform(const std::map<MultiIndex, C>& poly,
                                    const std::vector<C>& form) {
  std::map<MultiIndex, C> out;
  for (const auto& [key, c] : poly) {
    for (int i = 0; i < static_cast<int>(form.size()); ++i) {
      if (detail::exactly_zero(form[i])) continue;
      out[key.plus(MultiIndex::unit(static_cast<int>(form.size()), i))] += c * form[i];
    }
  }
  return out;
}

/// Expand Prod_j (Sum_i forms[j][i] X_i)^{exps_j} as a polynomial in X.
template <class C>
std::map<MultiIndex, C> expand_linform_powers(int dim, const std::vector<std::vector<C>>& forms,
                                              const MultiIndex& exps) {
  std::map<MultiIndex, C> acc;
  acc[MultiIndex::zeros(dim)] = detail::one_of(C{});
  for (int j = 0; j < exps.size(); ++j)
    for (int t = 0; t < exps[j]; ++t) acc = mul_linform(acc, forms[j]);
  return acc;
}

std::vector<ExactComplex> flatten(const CMatX& m) {
  std::vector<ExactComplex> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

std::vector<std::complex<double>> flatten(const CMatD& m) {
  std::vector<std::complex<double>> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

template <class T, class Conj>
T omega_eval_impl(const GroupElement<T>& g, const DiskSection& s, std::span<const T> zeta,
                  std::span<const T> v, T (*conv)(const ExactComplex&), Conj conj_fn) {
  require_shape(g);
  if (s.p != g.p || s.q != g.q)
    throw std::invalid_argument("omega_eval: section and group signatures differ");
  if (static_cast<int>(zeta.size()) != g.p * g.q || static_cast<int>(v.size()) != g.q)
    throw std::invalid_argument("omega_eval: bad point shape");

  CMat<T> zmat(g.p, g.q);
  for (int i = 0; i < g.p; ++i)
    for (int j = 0; j < g.q; ++j) zmat.at(i, j) = zeta[static_cast<size_t>(i) * g.q + j];

  GroupElement<T> ginv{g.p, g.q, jmat<T>(g.p, g.q) * g.mat.adjoint() * jmat<T>(g.p, g.q)};
  CMat<T> zback = mobius(ginv, zmat);
  CMat<T> m = g.blockC() * zback + g.blockD();
  T det_m = m.det();

  std::vector<T> wbar(g.q, T{});
  for (int j = 0; j < g.q; ++j)
    for (int i = 0; i < g.q; ++i) wbar[j] += m.at(i, j) * conj_fn(v[i]);

  auto zflat = flatten(zback);
  T acc{};
  for (const auto& [eta, psi] : s.comps) {
    T term = zp_eval(psi, s.p, s.q, std::span<const T>(zflat));
    term = term * conv(ExactComplex(rat_frac(Integer(1), eta.factorial())));
    for (int j = 0; j < g.q; ++j) term = term * powi(wbar[j], eta[j]);
    acc += term;
  }
  return det_m * acc;
}

ExactComplex conv_exact(const ExactComplex& c) { return c; }
std::complex<double> conv_double(const ExactComplex& c) { return c.to_complex(); }

}  // namespace

bool check_group(const GroupElementX& g) {
  require_shape(g);
  auto j = jmat<ExactComplex>(g.p, g.q);
  return g.mat.adjoint() * j * g.mat == j;
}

bool check_group(const GroupElementF& g, double tol) {
  require_shape(g);
  auto j = jmat<std::complex<double>>(g.p, g.q);
  return (g.mat.adjoint() * j * g.mat - j).max_abs() <= tol;
}

GroupElementX group_inverse(const GroupElementX& g) {
  require_shape(g);
  auto j = jmat<ExactComplex>(g.p, g.q);
  return {g.p, g.q, j * g.mat.adjoint() * j};
}

GroupElementF group_inverse(const GroupElementF& g) {
  require_shape(g);
  auto j = jmat<std::complex<double>>(g.p, g.q);
  return {g.p, g.q, j * g.mat.adjoint() * j};
}

CMatX mobius(const GroupElementX& g, const CMatX& zeta) {
  require_shape(g);
  if (zeta.rows() != g.p || zeta.cols() != g.q)
    throw std::invalid_argument("mobius: point shape mismatch");
  return (g.blockA() * zeta + g.blockB()) * (g.blockC() * zeta + g.blockD()).inverse();
}

CMatD mobius(const GroupElementF& g, const CMatD& zeta) {
  require_shape(g);
  if (zeta.rows() != g.p || zeta.cols() != g.q)
    throw std::invalid_argument("mobius: point shape mismatch");
  return (g.blockA() * zeta + g.blockB()) * (g.blockC() * zeta + g.blockD()).inverse();
}

std::map<MultiIndex, ExactComplex> multiplier(const GroupElementX& g, const CMatX& zeta,
                                              const std::map<MultiIndex, ExactComplex>& fiber,
                                              int n) {
  require_shape(g);
  CMatX m = g.blockC() * zeta + g.blockD();
  ExactComplex det_m = m.det();

  // F(M^* v): with w = M^* v the conjugate coordinates transform as
  // wbar_j = Sum_i M_{ij} vbar_i, so each vbar-slot j picks up the linear
  // form with coefficients (column j of M).
  std::vector<std::vector<ExactComplex>> forms(g.q);
  for (int j = 0; j < g.q; ++j) {
    forms[j].resize(g.q);
    for (int i = 0; i < g.q; ++i) forms[j][i] = m.at(i, j);
  }

  std::map<MultiIndex, ExactComplex> out;
  for (const auto& [eta, c] : fiber) {
    if (eta.size() != g.q || eta.order() != n)
      throw std::invalid_argument("multiplier: fiber monomial has wrong shape");
    auto expanded = expand_linform_powers(g.q, forms, eta);
    for (auto& [key, val] : expanded) {
      ExactComplex total = c * det_m * val;
      if (!total.is_zero()) out[key] += total;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ExactComplex omega_eval(const GroupElementX& g, const DiskSection& s,
                        std::span<const ExactComplex> zeta, std::span<const ExactComplex> v) {
  return omega_eval_impl<ExactComplex>(g, s, zeta, v, conv_exact,
                                       [](const ExactComplex& z) { return z.conj(); });
}

std::complex<double> omega_eval(const GroupElementF& g, const DiskSection& s,
                                std::span<const std::complex<double>> zeta,
                                std::span<const std::complex<double>> v) {
  return omega_eval_impl<std::complex<double>>(
      g, s, zeta, v, conv_double, [](const std::complex<double>& z) { return std::conj(z); });
}

bool is_compact_diag(const GroupElementX& g) {
  require_shape(g);
  for (int i = 0; i < g.p; ++i)
    for (int j = 0; j < g.q; ++j)
      if (!g.mat.at(i, g.p + j).is_zero() || !g.mat.at(g.p + j, i).is_zero()) return false;
  CMatX a = g.blockA();
  CMatX d = g.blockD();
  return a.adjoint() * a == CMatX::identity(g.p) && d.adjoint() * d == CMatX::identity(g.q);
}

FockPoly sigma_compact(const GroupElementX& k, const FockPoly& f) {
  require_shape(k);
  if (f.p != k.p || f.q != k.q)
    throw std::invalid_argument("sigma_compact: polynomial and group signatures differ");
  if (!is_compact_diag(k))
    throw std::invalid_argument("sigma_compact: element does not stabilize the origin");

  CMatX a = k.blockA();
  CMatX d = k.blockD();
  // The scalar factor det(D) (not its conjugate) is forced by the fiber
  // action: with det(D^*) the map g -> sigma(g) picks up the phase
  // det(D)^2/|det(D)|^2 under composition and fails to be a homomorphism.
  ExactComplex det_d = d.det();

  // (A^* z_R)_i = Sum_k conj(A_{ki}) z_k ; conj((D^* z_S)_j) = Sum_k D_{kj} zbar_k.
  std::vector<std::vector<ExactComplex>> holo_forms(k.p), anti_forms(k.q);
  for (int i = 0; i < k.p; ++i) {
    holo_forms[i].resize(k.p);
    for (int t = 0; t < k.p; ++t) holo_forms[i][t] = a.at(t, i).conj();
  }
  for (int j = 0; j < k.q; ++j) {
    anti_forms[j].resize(k.q);
    for (int t = 0; t < k.q; ++t) anti_forms[j][t] = d.at(t, j);
  }

  FockPoly out;
  out.p = f.p;
  out.q = f.q;
  for (const auto& [key, c] : f.terms) {
    auto holo = expand_linform_powers(k.p, holo_forms, key.l);
    auto anti = expand_linform_powers(k.q, anti_forms, key.m);
    for (const auto& [lk, ca] : holo)
      for (const auto& [mk, cb] : anti) fock_add_term(out, {lk, mk}, c * det_d * ca * cb);
  }
  return out;
}

namespace {

using C = std::complex<double>;

void fockf_add_term(FockPolyF& f, const FockKey& key, const C& c) { f.terms[key] += c; }

FockPolyF fockf_mul(const FockPolyF& a, const FockPolyF& b, int max_degree) {
  FockPolyF out;
  out.p = a.p;
  out.q = a.q;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      FockKey key{ka.l.plus(kb.l), ka.m.plus(kb.m)};
      if (key.l.order() + key.m.order() > max_degree) continue;
      out.terms[key] += ca * cb;
    }
  return out;
}

FockPolyF fockf_scale(FockPolyF f, const C& c) {
  for (auto& [k, v] : f.terms) v *= c;
  return f;
}

struct WickContext {
  int p, q, nn;  // nn = p + q
  const CMatD* v;
  int max_degree;
};

/// Sum over Wick pairings of Prod w^mu Prod wbar^kappa against a Gaussian
/// with covariance V, where each w_i additionally carries the source mean
/// Sum_{j<p} V_{ij} z_{R,j} and each wbar_k the mean Sum_{s<q} zbar_s V_{p+s,k}.
/// Returns the resulting polynomial in (z_R, zbar_S).
FockPolyF wick(const WickContext& ctx, MultiIndex mu, MultiIndex kappa) {
  int slot = -1;
  for (int i = 0; i < ctx.nn; ++i)
    if (mu[i] > 0) {
      slot = i;
      break;
    }

  if (slot < 0) {
    // Only conjugate factors remain: each takes its mean, a linear form in
    // zbar_S. Expand the product of powers.
    std::vector<std::vector<C>> forms(ctx.nn);
    for (int k = 0; k < ctx.nn; ++k) {
      forms[k].resize(ctx.q);
      for (int s = 0; s < ctx.q; ++s) forms[k][s] = ctx.v->at(ctx.p + s, k);
    }
    auto anti = expand_linform_powers(ctx.q, forms, kappa);
    FockPolyF out;
    out.p = ctx.p;
    out.q = ctx.q;
    for (const auto& [mk, c] : anti)
      if (c != C(0.0)) fockf_add_term(out, {MultiIndex::zeros(ctx.p), mk}, c);
    return out;
  }

  MultiIndex rest = mu.with(slot, mu[slot] - 1);

  // Branch 1: w_slot takes its mean, contributing V_{slot,j} z_{R,j}.
  FockPolyF sub = wick(ctx, rest, kappa);
  FockPolyF out;
  out.p = ctx.p;
  out.q = ctx.q;
  for (const auto& [key, c] : sub.terms)
    for (int j = 0; j < ctx.p; ++j) {
      C f = ctx.v->at(slot, j);
      if (f == C(0.0)) continue;
      FockKey shifted{key.l.plus(MultiIndex::unit(ctx.p, j)), key.m};
      if (shifted.l.order() + shifted.m.order() <= ctx.max_degree)
        fockf_add_term(out, shifted, c * f);
    }

  // Branch 2: contract w_slot against one of the remaining wbar_k.
  for (int k = 0; k < ctx.nn; ++k) {
    if (kappa[k] == 0) continue;
    C f = C(static_cast<double>(kappa[k])) * ctx.v->at(slot, k);
    if (f == C(0.0)) continue;
    FockPolyF contracted = wick(ctx, rest, kappa.with(k, kappa[k] - 1));
    for (const auto& [key, c] : contracted.terms) fockf_add_term(out, key, c * f);
  }
  return out;
}

}  // namespace

FockPolyF sigma_general(const GroupElementF& g, const FockPoly& f, int max_degree) {
  require_shape(g);
  if (f.p != g.p || f.q != g.q)
    throw std::invalid_argument("sigma_general: polynomial and group signatures differ");
  if (max_degree < 0) throw std::invalid_argument("sigma_general: negative degree cap");

  const int p = g.p, q = g.q, nn = p + q;
  CMatD h = g.mat.inverse();

  CMatD u(nn, nn);
  {
    CMatD hh = h.adjoint() * h;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        u.at(i, j) = 0.5 * (hh.at(i, j) + (i == j ? C(1.0) : C(0.0)));
  }
  CMatD v = u.inverse();
  C det_u = u.det();
  C det_d = g.blockD().det();

  // f(h w), expanded into joint monomials in (w, wbar) over all p+q slots.
  std::map<std::pair<MultiIndex, MultiIndex>, C> joint;
  for (const auto& [key, coeff] : f.terms) {
    std::map<std::pair<MultiIndex, MultiIndex>, C> acc;
    acc[{MultiIndex::zeros(nn), MultiIndex::zeros(nn)}] = coeff.to_complex();
    auto mul_w = [&](int row, bool conjugated) {
      std::map<std::pair<MultiIndex, MultiIndex>, C> next;
      for (const auto& [jk, c] : acc)
        for (int k = 0; k < nn; ++k) {
          C hf = conjugated ? std::conj(h.at(row, k)) : h.at(row, k);
          if (hf == C(0.0)) continue;
          auto key2 = jk;
          if (conjugated)
            key2.second = key2.second.plus(MultiIndex::unit(nn, k));
          else
            key2.first = key2.first.plus(MultiIndex::unit(nn, k));
          next[key2] += c * hf;
        }
      acc = std::move(next);
    };
    for (int i = 0; i < p; ++i)
      for (int t = 0; t < key.l[i]; ++t) mul_w(i, false);
    for (int j = 0; j < q; ++j)
      for (int t = 0; t < key.m[j]; ++t) mul_w(p + j, true);
    for (const auto& [jk, c] : acc) joint[jk] += c;
  }

  WickContext ctx{p, q, nn, &v, max_degree};
  FockPolyF total;
  total.p = p;
  total.q = q;
  for (const auto& [jk, c] : joint) {
    FockPolyF w = wick(ctx, jk.first, jk.second);
    for (const auto& [key, wc] : w.terms) fockf_add_term(total, key, c * wc);
  }

  // Bilinear source factor exp(Sum_{s,j} zbar_{S,s} V_{p+s,j} z_{R,j}),
  // truncated at the degree cap (each factor raises total degree by 2).
  FockPolyF expo;
  expo.p = p;
  expo.q = q;
  for (int s = 0; s < q; ++s)
    for (int j = 0; j < p; ++j) {
      C c = v.at(p + s, j);
      if (c != C(0.0)) fockf_add_term(expo, {MultiIndex::unit(p, j), MultiIndex::unit(q, s)}, c);
    }
  FockPolyF series;
  series.p = p;
  series.q = q;
  fockf_add_term(series, {MultiIndex::zeros(p), MultiIndex::zeros(q)}, C(1.0));
  FockPolyF power = series;
  for (int k = 1; 2 * k <= max_degree; ++k) {
    power = fockf_scale(fockf_mul(power, expo, max_degree), C(1.0 / k));
    if (power.terms.empty()) break;
    for (const auto& [key, c] : power.terms) fockf_add_term(series, key, c);
  }

  FockPolyF out = fockf_mul(total, series, max_degree);
  return fock_trim(fockf_scale(std::move(out), det_d / det_u), 0.0);
}

GroupElementF group_to_float(const GroupElementX& g) { return {g.p, g.q, to_double(g.mat)}; }

}  // namespace ladder
