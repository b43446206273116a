#include "ladder/transform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ladder {

namespace {

/// Contribution of one monomial a z_R^alpha zbar_S^beta to the section.
void transform_term(DiskSection& out, int n, const MultiIndex& alpha,
                    const MultiIndex& beta, const ExactComplex& a) {
  const Integer scale = alpha.factorial() * beta.factorial();
  for (const MultiIndex& eta : enumerate_bounded_weight(n, beta)) {
    MultiIndex rem = *beta.minus(eta);
    for (const MatrixIndex& gamma : enumerate_margin_tables(alpha, rem)) {
      ExactComplex coeff = a * rat_frac(scale, gamma.factorial());
      section_add_term(out, eta, gamma, coeff);
    }
  }
}

DiskSection phi_impl(const FockPoly& f, bool parallel) {
  Grade g = grade(f);
  if (g.kind == Grade::Kind::mixed)
    throw std::invalid_argument("phi: input mixes grades");
  const int n = g.kind == Grade::Kind::pure ? g.n : 0;
  DiskSection out = section_zero(f.p, f.q, n);
  if (g.kind == Grade::Kind::any || n < 0) return out;  // zero section

  std::vector<const std::pair<const FockKey, ExactComplex>*> terms;
  terms.reserve(f.terms.size());
  for (const auto& t : f.terms) terms.push_back(&t);

#ifdef _OPENMP
  if (parallel && terms.size() >= 16) {
    std::vector<DiskSection> partial;
    #pragma omp parallel
    {
      #pragma omp single
      partial.assign(static_cast<size_t>(omp_get_num_threads()),
                     section_zero(f.p, f.q, n));
      DiskSection& mine = partial[static_cast<size_t>(omp_get_thread_num())];
      #pragma omp for schedule(dynamic, 8)
      for (long i = 0; i < static_cast<long>(terms.size()); ++i)
        transform_term(mine, n, terms[static_cast<size_t>(i)]->first.l,
                       terms[static_cast<size_t>(i)]->first.m,
                       terms[static_cast<size_t>(i)]->second);
    }
    // Exact addition commutes, so the merge order is immaterial.
    for (const DiskSection& part : partial) out = section_add(out, part);
    return out;
  }
#else
  (void)parallel;
#endif

  for (const auto* t : terms) transform_term(out, n, t->first.l, t->first.m, t->second);
  return out;
}

}  // namespace

DiskSection phi(const FockPoly& f) { return phi_impl(f, true); }

DiskSection phi_serial(const FockPoly& f) { return phi_impl(f, false); }

DiskSection phi_ball(int q, const MultiIndex& nu, int n) {
  if (nu.size() != q) throw std::invalid_argument("phi_ball: exponent length mismatch");
  if (n < 0 || nu.order() < n) throw std::invalid_argument("phi_ball: requires |nu| >= n >= 0");
  DiskSection out = section_zero(1, q, n);
  const Integer scale = nu.factorial() * factorial_int(nu.order() - n);
  for (const MultiIndex& eta : enumerate_bounded_weight(n, nu)) {
    MultiIndex gamma = *nu.minus(eta);
    section_add_term(out, eta, MatrixIndex::from_row(gamma),
                     ExactComplex(rat_frac(scale, gamma.factorial())));
  }
  return out;
}

}  // namespace ladder
