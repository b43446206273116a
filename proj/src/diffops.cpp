#include "ladder/diffops.hpp"

namespace ladder {

std::vector<MinorSpec> all_minors(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("all_minors: bad signature");
  std::vector<MinorSpec> out;
  for (int r1 = 1; r1 <= p + 1; ++r1)
    for (int r2 = r1 + 1; r2 <= p + 1; ++r2)
      for (int c1 = 1; c1 <= q; ++c1)
        for (int c2 = c1 + 1; c2 <= q; ++c2) out.push_back({r1, r2, c1, c2});
  return out;
}

DiskSection dzeta(const DiskSection& s, int i, int j) {
  if (i < 1 || i > s.p || j < 1 || j > s.q)
    throw std::invalid_argument("dzeta: slot out of range");
  DiskSection r = section_zero(s.p, s.q, s.n);
  for (const auto& [eta, poly] : s.comps) {
    ZetaPoly out;
    for (const auto& [gamma, c] : poly) {
      int k = gamma.at(i - 1, j - 1);
      if (k == 0) continue;
      out.emplace(gamma.plus_at(i - 1, j - 1, -1), c * Rational(k));
    }
    if (!out.empty()) r.comps.emplace(eta, std::move(out));
  }
  return r;
}

DiskSection dvbar(const DiskSection& s, int j) {
  if (j < 1 || j > s.q) throw std::invalid_argument("dvbar: slot out of range");
  DiskSection r = section_zero(s.p, s.q, s.n - 1);
  const MultiIndex unit = MultiIndex::unit(s.q, j - 1);
  for (const auto& [eta, poly] : s.comps) {
    auto shifted = eta.minus(unit);
    if (!shifted) continue;
    r.comps.emplace(*shifted, poly);
  }
  return r;
}

namespace {

DiskSection apply_row_op(const DiskSection& s, int p, int row, int col) {
  if (row <= p) return dzeta(s, row, col);
  return dvbar(s, col);
}

}  // namespace

DiskSection apply_minor(const DiskSection& s, const MinorSpec& minor) {
  if (minor.r1 < 1 || minor.r1 >= minor.r2 || minor.r2 > s.p + 1)
    throw std::invalid_argument("apply_minor: bad rows");
  if (minor.c1 < 1 || minor.c1 >= minor.c2 || minor.c2 > s.q)
    throw std::invalid_argument("apply_minor: bad columns");
  DiskSection first =
      apply_row_op(apply_row_op(s, s.p, minor.r2, minor.c2), s.p, minor.r1, minor.c1);
  DiskSection second =
      apply_row_op(apply_row_op(s, s.p, minor.r2, minor.c1), s.p, minor.r1, minor.c2);
  return section_add(first, section_scale(second, -ExactComplex::one()));
}

}  // namespace ladder
