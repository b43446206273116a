#include "ladder/inversion.hpp"

#include "ladder/diffops.hpp"
#include "ladder/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ladder {

namespace {

struct FlatTerm {
  const MultiIndex* eta;
  const MatrixIndex* gamma;
  const ExactComplex* coeff;  // stored coefficient (absolute * eta!)
};

std::vector<FlatTerm> flatten(const DiskSection& s) {
  std::vector<FlatTerm> terms;
  for (const auto& [eta, poly] : s.comps)
    for (const auto& [gamma, c] : poly) terms.push_back({&eta, &gamma, &c});
  return terms;
}

/// One stored term of the normalized section into the reconstruction.
void invert_term(FockPoly& out, const FlatTerm& t) {
  const MultiIndex g = t.gamma->row(0);
  const int k = g.order();
  // absolute coefficient c = stored / eta!, then divide by |gamma|!.
  Rational divisor(t.eta->factorial() * factorial_int(k));
  ExactComplex c = *t.coeff / divisor;
  fock_add_term(out, {MultiIndex{k}, g.plus(*t.eta)}, c);
}

FockPoly invert_impl(const DiskSection& s, bool parallel) {
  if (s.p != 1) throw std::invalid_argument("invert: requires p = 1");
  if (s.n < 0) throw std::invalid_argument("invert: negative weight");
  section_validate(s);
  DiskSection norm = l_op(s);
  FockPoly out{1, s.q, {}};

  std::vector<FlatTerm> terms = flatten(norm);

#ifdef _OPENMP
  if (parallel && terms.size() >= 64) {
    std::vector<FockPoly> partial;
    #pragma omp parallel
    {
      #pragma omp single
      partial.assign(static_cast<size_t>(omp_get_num_threads()), FockPoly{1, s.q, {}});
      FockPoly& mine = partial[static_cast<size_t>(omp_get_thread_num())];
      #pragma omp for schedule(static)
      for (long i = 0; i < static_cast<long>(terms.size()); ++i)
        invert_term(mine, terms[static_cast<size_t>(i)]);
    }
    for (const FockPoly& part : partial) out = fock_add(out, part);
    return out;
  }
#else
  (void)parallel;
#endif

  for (const FlatTerm& t : terms) invert_term(out, t);
  return out;
}

ExactComplex pairing_impl(const DiskSection& a, const DiskSection& b, bool parallel) {
  if (a.p != 1 || b.p != 1) throw std::invalid_argument("pairing: requires p = 1");
  if (a.q != b.q || a.n != b.n) throw std::invalid_argument("pairing: signature mismatch");
  if (a.n < 0) throw std::invalid_argument("pairing: negative weight");
  DiskSection norm = l_op(a);
  std::vector<FlatTerm> terms = flatten(norm);

  auto one_term = [&](const FlatTerm& t) -> ExactComplex {
    auto comp = b.comps.find(*t.eta);
    if (comp == b.comps.end()) return ExactComplex::zero();
    auto match = comp->second.find(*t.gamma);
    if (match == comp->second.end()) return ExactComplex::zero();
    const MultiIndex g = t.gamma->row(0);
    // stored1 * conj(stored2) * gamma! / (eta! |gamma|!): both stored
    // coefficients carry an eta! relative to the absolute ones, one of
    // which survives in the pairing weight eta! gamma! / |gamma|!.
    Rational w = rat_frac(g.factorial(), t.eta->factorial() * factorial_int(g.order()));
    return *t.coeff * match->second.conj() * w;
  };

#ifdef _OPENMP
  if (parallel && terms.size() >= 64) {
    std::vector<ExactComplex> partial;
    #pragma omp parallel
    {
      #pragma omp single
      partial.assign(static_cast<size_t>(omp_get_num_threads()), ExactComplex::zero());
      ExactComplex& mine = partial[static_cast<size_t>(omp_get_thread_num())];
      #pragma omp for schedule(static)
      for (long i = 0; i < static_cast<long>(terms.size()); ++i)
        mine += one_term(terms[static_cast<size_t>(i)]);
    }
    ExactComplex acc;
    for (const ExactComplex& part : partial) acc += part;
    return acc;
  }
#else
  (void)parallel;
#endif

  ExactComplex acc;
  for (const FlatTerm& t : terms) acc += one_term(t);
  return acc;
}

}  // namespace

FockPoly invert(const DiskSection& s) { return invert_impl(s, true); }
FockPoly invert_serial(const DiskSection& s) { return invert_impl(s, false); }

ExactComplex pairing(const DiskSection& a, const DiskSection& b) {
  return pairing_impl(a, b, true);
}
ExactComplex pairing_serial(const DiskSection& a, const DiskSection& b) {
  return pairing_impl(a, b, false);
}

std::vector<DiskSection> minor_kernel_basis(int m, int n, int q) {
  if (m < 0 || n < 0 || q < 1) throw std::invalid_argument("minor_kernel_basis: bad arguments");

  // Candidate monomial basis: stored psi^(eta) = zeta^gamma with |gamma| = m,
  // |eta| = n. Column order pairs (gamma, eta) lexicographically.
  std::vector<MultiIndex> gammas = enumerate_weight(m, q);
  std::vector<MultiIndex> etas = enumerate_weight(n, q);
  const int ncols = static_cast<int>(gammas.size() * etas.size());
  auto col_of = [&](int gi, int ei) { return gi * static_cast<int>(etas.size()) + ei; };

  std::vector<std::vector<Rational>> rows;
  if (m >= 1 && n >= 1 && q >= 2) {
    // Target space of each minor: pairs (gamma', eta') at degree m-1, weight n-1.
    std::vector<MultiIndex> tg = enumerate_weight(m - 1, q);
    std::vector<MultiIndex> te = enumerate_weight(n - 1, q);
    std::map<std::pair<MultiIndex, MultiIndex>, int> target_index;
    int ti = 0;
    for (const auto& g : tg)
      for (const auto& e : te) target_index[{g, e}] = ti++;

    for (int c1 = 0; c1 < q; ++c1)
      for (int c2 = c1 + 1; c2 < q; ++c2) {
        std::vector<std::vector<Rational>> block(
            static_cast<size_t>(ti), std::vector<Rational>(static_cast<size_t>(ncols), Rational(0)));
        for (size_t gi = 0; gi < gammas.size(); ++gi)
          for (size_t ei = 0; ei < etas.size(); ++ei) {
            const MultiIndex& g = gammas[gi];
            const MultiIndex& e = etas[ei];
            // d/dzeta_{c1} d/dvbar_{c2} on stored components: the vbar
            // derivative re-keys eta -> eta - unit(c2), the zeta derivative
            // multiplies by the exponent.
            if (g[c1] > 0 && e[c2] > 0) {
              auto tgt = target_index.find(
                  {*g.minus(MultiIndex::unit(q, c1)), *e.minus(MultiIndex::unit(q, c2))});
              block[static_cast<size_t>(tgt->second)][static_cast<size_t>(col_of(
                  static_cast<int>(gi), static_cast<int>(ei)))] += g[c1];
            }
            if (g[c2] > 0 && e[c1] > 0) {
              auto tgt = target_index.find(
                  {*g.minus(MultiIndex::unit(q, c2)), *e.minus(MultiIndex::unit(q, c1))});
              block[static_cast<size_t>(tgt->second)][static_cast<size_t>(col_of(
                  static_cast<int>(gi), static_cast<int>(ei)))] -= g[c2];
            }
          }
        for (auto& row : block) rows.push_back(std::move(row));
      }
  }

  std::vector<std::vector<Rational>> basis;
  if (rows.empty()) {
    // No constraints (q = 1, m = 0, or n = 0): the whole monomial space.
    for (int c = 0; c < ncols; ++c) {
      std::vector<Rational> v(static_cast<size_t>(ncols), Rational(0));
      v[static_cast<size_t>(c)] = 1;
      basis.push_back(std::move(v));
    }
  } else {
    basis = nullspace(std::move(rows), ncols);
  }

  std::vector<DiskSection> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    DiskSection s = section_zero(1, q, n);
    for (size_t gi = 0; gi < gammas.size(); ++gi)
      for (size_t ei = 0; ei < etas.size(); ++ei) {
        const Rational& c = v[static_cast<size_t>(col_of(static_cast<int>(gi), static_cast<int>(ei)))];
        if (c == 0) continue;
        section_add_term(s, etas[ei], MatrixIndex::from_row(gammas[gi]), ExactComplex(c));
      }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ladder
