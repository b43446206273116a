#pragma once

#include "ladder/section.hpp"

namespace ladder {

/// The operator matrix on sections over the p x q matrix ball has p + 1
/// rows: rows 1..p differentiate in the matrix variable (d/dzeta_{ij}) and
/// row p+1 differentiates in the fiber (d/dvbar_j). A 2x2 minor picks rows
/// r1 < r2 and columns c1 < c2 (all 1-based):
///
///   D = D_{r1,c1} D_{r2,c2} - D_{r1,c2} D_{r2,c1}.
///
/// Minors that use the fiber row lower the weight by one; pure matrix-row
/// minors preserve it. Transforms of pure-grade polynomials are annihilated
/// by every minor.
struct MinorSpec {
  int r1, r2;  // 1 <= r1 < r2 <= p+1
  int c1, c2;  // 1 <= c1 < c2 <= q
};

/// All C(p+1,2) * C(q,2) minors of the (p+1) x q operator matrix.
std::vector<MinorSpec> all_minors(int p, int q);

/// d/dzeta_{ij} on every stored component (i, j 1-based).
DiskSection dzeta(const DiskSection& s, int i, int j);

/// d/dvbar_j (j 1-based). Under the stored 1/eta! convention this is a pure
/// re-keying: the output component at eta is the input component at
/// eta + unit_j. Lowers n by one.
DiskSection dvbar(const DiskSection& s, int j);

/// Apply one minor. The output weight is n-1 if the fiber row occurs,
/// n otherwise (and may be negative on weight-0 input, where the result is
/// necessarily the zero section).
DiskSection apply_minor(const DiskSection& s, const MinorSpec& minor);

}  // namespace ladder
