#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ladder/exact.hpp"

namespace ladder {

/// Tuple of nonnegative integers. operator<=> is lexicographic (inherited
/// from std::vector), which for equal lengths is exactly the lex order used
/// to arrange weight components.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zeros(int r);
  /// Unit tuple with a single 1 in (0-based) slot j.
  static MultiIndex unit(int r, int j);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  /// Sum of the entries.
  int order() const;
  /// Product of the entry factorials.
  Integer factorial() const;
  bool is_zero() const;

  MultiIndex plus(const MultiIndex& o) const;
  /// Entrywise difference, or nullopt if any entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& o) const;
  MultiIndex with(int i, int v) const;

  std::string str() const;  // "(a,b,c)"

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> e_;
};

enum class LexOrder { less, equal, greater };

/// Lexicographic comparison of equal-length tuples; throws on length mismatch.
LexOrder lex_compare(const MultiIndex& a, const MultiIndex& b);

/// Entrywise a <= b; throws on length mismatch.
bool partial_leq(const MultiIndex& a, const MultiIndex& b);

/// Immediate lex successor within the fixed-weight family {m : |m| = |a|},
/// or nullopt when a = (n,0,...,0) is lex-maximal. The successor bumps the
/// last slot that still has weight to its right and pushes the remaining
/// weight into the final slot (the lex-least completion).
std::optional<MultiIndex> lex_successor(const MultiIndex& a);

/// 1-based slot where a first disagrees with its immediate lex successor;
/// 0 when a has no successor. Equivalently: (last nonzero slot) - 1.
int succ_index(const MultiIndex& a);

/// All tuples of length q with weight n, lex increasing:
/// (0,...,0,n) first, (n,0,...,0) last.
std::vector<MultiIndex> enumerate_weight(int n, int q);

/// d(n,q) = C(n+q-1, q-1), the size of enumerate_weight(n,q).
Integer count_weight(int n, int q);

/// All tuples m <= bound (entrywise) with |m| = n, lex increasing.
std::vector<MultiIndex> enumerate_bounded_weight(int n, const MultiIndex& bound);

/// p x q matrix of nonnegative integers, stored row-major. Ordering is
/// row-major lexicographic so these can key sorted maps.
class MatrixIndex {
 public:
  MatrixIndex() = default;
  MatrixIndex(int p, int q);
  /// 1 x q matrix from a single row.
  static MatrixIndex from_row(const MultiIndex& row);
  static MatrixIndex from_rows(const std::vector<MultiIndex>& rows);

  int rows() const { return p_; }
  int cols() const { return q_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * q_ + j]; }
  void set(int i, int j, int v);

  MultiIndex row(int i) const;
  /// Per-row sums: a p-tuple (total of each row).
  MultiIndex row_totals() const;
  /// Per-column sums: a q-tuple (total of each column).
  MultiIndex column_totals() const;

  int order() const;
  /// Product over rows of the row factorial.
  Integer factorial() const;

  MatrixIndex plus_at(int i, int j, int delta) const;

  std::string str() const;

  friend bool operator==(const MatrixIndex&, const MatrixIndex&) = default;
  friend auto operator<=>(const MatrixIndex&, const MatrixIndex&) = default;

 private:
  int p_ = 0, q_ = 0;
  std::vector<int> e_;
};

/// All p x q matrices with the given row totals (length p) and column totals
/// (length q). Empty when the totals disagree in weight. Enumeration is
/// row-by-row: each row runs over bounded compositions of its total, with
/// the remaining column capacity as the bound.
std::vector<MatrixIndex> enumerate_margin_tables(const MultiIndex& row_totals,
                                                 const MultiIndex& column_totals);

}  // namespace ladder
