#include "ladder/operators.hpp"

namespace ladder {

namespace {

void require_row_section(const DiskSection& s, const char* who) {
  if (s.p != 1) throw std::invalid_argument(std::string(who) + ": requires p = 1");
}

/// Drop monomials with a positive exponent in any of the first `count`
/// zeta slots (Q_1 ... Q_count applied at once).
ZetaPoly drop_leading_slots(const ZetaPoly& poly, int count) {
  if (count <= 0) return poly;
  ZetaPoly r;
  for (const auto& [gamma, c] : poly) {
    bool keep = true;
    for (int j = 0; j < count; ++j)
      if (gamma.at(0, j) > 0) {
        keep = false;
        break;
      }
    if (keep) r.emplace(gamma, c);
  }
  return r;
}

/// Multiply each monomial by gamma! / (gamma + rho)! (restricted shift).
ZetaPoly shift_weights(const ZetaPoly& poly, const MultiIndex& rho) {
  ZetaPoly r;
  for (const auto& [gamma, c] : poly) {
    MultiIndex g = gamma.row(0);
    Rational mult = rat_frac(g.factorial(), g.plus(rho).factorial());
    r.emplace(gamma, c * mult);
  }
  return r;
}

}  // namespace

DiskSection q_op(const DiskSection& s, int j) {
  require_row_section(s, "q_op");
  if (j < 1 || j > s.q) throw std::invalid_argument("q_op: slot out of range");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) {
    ZetaPoly kept;
    for (const auto& [gamma, c] : poly)
      if (gamma.at(0, j - 1) == 0) kept.emplace(gamma, c);
    if (!kept.empty()) r.comps.emplace(eta, std::move(kept));
  }
  return r;
}

DiskSection p_op(const DiskSection& s) {
  require_row_section(s, "p_op");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) {
    ZetaPoly kept = drop_leading_slots(poly, succ_index(eta));
    if (!kept.empty()) r.comps.emplace(eta, std::move(kept));
  }
  return r;
}

DiskSection i_op(const DiskSection& s, int m, int j) {
  require_row_section(s, "i_op");
  if (m < 0) throw std::invalid_argument("i_op: negative shift");
  if (j < 1 || j > s.q) throw std::invalid_argument("i_op: slot out of range");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) {
    ZetaPoly out;
    for (const auto& [gamma, c] : poly) {
      int k = gamma.at(0, j - 1);
      Rational mult = rat_frac(factorial_int(k), factorial_int(k + m));
      out.emplace(gamma, c * mult);
    }
    r.comps.emplace(eta, std::move(out));
  }
  return r;
}

DiskSection f_op(const DiskSection& s, const MultiIndex& rho) {
  require_row_section(s, "f_op");
  if (rho.size() != s.q) throw std::invalid_argument("f_op: rho length mismatch");
  if (rho.order() != s.n) throw std::invalid_argument("f_op: requires |rho| = n");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) r.comps.emplace(eta, shift_weights(poly, rho));
  return r;
}

DiskSection l_op(const DiskSection& s) {
  require_row_section(s, "l_op");
  if (s.n < 0) throw std::invalid_argument("l_op: negative weight");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) {
    ZetaPoly kept = drop_leading_slots(poly, succ_index(eta));
    if (kept.empty()) continue;
    ZetaPoly shifted = shift_weights(kept, eta);
    ExactComplex efac{Rational(eta.factorial())};
    ZetaPoly out = zp_scale(shifted, efac);
    if (!out.empty()) r.comps.emplace(eta, std::move(out));
  }
  return r;
}

MultiIndex eta_max(const MultiIndex& nu, int n) {
  if (n < 0) throw std::invalid_argument("eta_max: negative weight");
  if (nu.order() < n) throw std::invalid_argument("eta_max: requires |nu| >= n");
  std::vector<int> e(static_cast<size_t>(nu.size()), 0);
  int rem = n;
  for (int j = 0; j < nu.size() && rem > 0; ++j) {
    int take = std::min(nu[j], rem);
    e[static_cast<size_t>(j)] = take;
    rem -= take;
  }
  return MultiIndex(std::move(e));
}

}  // namespace ladder
