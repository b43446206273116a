#include "ladder/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace ladder {

namespace {

void require_nonneg(const std::vector<int>& e) {
  for (int v : e)
    if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
}

void require_same_size(const MultiIndex& a, const MultiIndex& b, const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": length mismatch");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  require_nonneg(e_);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : e_(entries) {
  require_nonneg(e_);
}

MultiIndex MultiIndex::zeros(int r) {
  if (r < 0) throw std::invalid_argument("MultiIndex::zeros: negative length");
  return MultiIndex(std::vector<int>(static_cast<size_t>(r), 0));
}

MultiIndex MultiIndex::unit(int r, int j) {
  if (j < 0 || j >= r) throw std::invalid_argument("MultiIndex::unit: slot out of range");
  std::vector<int> e(static_cast<size_t>(r), 0);
  e[static_cast<size_t>(j)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Integer MultiIndex::factorial() const {
  Integer r(1);
  for (int v : e_) r *= factorial_int(v);
  return r;
}

bool MultiIndex::is_zero() const {
  for (int v : e_)
    if (v != 0) return false;
  return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
  require_same_size(*this, o, "MultiIndex::plus");
  std::vector<int> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
  require_same_size(*this, o, "MultiIndex::minus");
  std::vector<int> e(e_);
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] -= o.e_[i];
    if (e[i] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::with(int i, int v) const {
  std::vector<int> e(e_);
  e.at(static_cast<size_t>(i)) = v;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ",";
    os << e_[i];
  }
  os << ")";
  return os.str();
}

LexOrder lex_compare(const MultiIndex& a, const MultiIndex& b) {
  require_same_size(a, b, "lex_compare");
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return LexOrder::less;
    if (a[i] > b[i]) return LexOrder::greater;
  }
  return LexOrder::equal;
}

bool partial_leq(const MultiIndex& a, const MultiIndex& b) {
  require_same_size(a, b, "partial_leq");
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::optional<MultiIndex> lex_successor(const MultiIndex& a) {
  const int q = a.size();
  if (q == 0) return std::nullopt;
  // Last slot j (0-based, j < q-1) with weight strictly to its right.
  int tail = 0, jstar = -1;
  for (int j = q - 2; j >= 0; --j) {
    tail += a[j + 1];
    if (tail > 0) {
      jstar = j;
      break;
    }
  }
  if (jstar < 0) return std::nullopt;  // all weight in slot 0
  std::vector<int> e(a.entries());
  int moved = 0;
  for (int j = jstar + 1; j < q; ++j) {
    moved += e[static_cast<size_t>(j)];
    e[static_cast<size_t>(j)] = 0;
  }
  e[static_cast<size_t>(jstar)] += 1;
  e[static_cast<size_t>(q - 1)] = moved - 1;
  return MultiIndex(std::move(e));
}

int succ_index(const MultiIndex& a) {
  auto s = lex_successor(a);
  if (!s) return 0;
  for (int j = 0; j < a.size(); ++j)
    if (a[j] != (*s)[j]) return j + 1;
  return 0;  // unreachable: a successor always differs somewhere
}

namespace {

void enumerate_weight_rec(int n, int q, std::vector<int>& cur,
                          std::vector<MultiIndex>& out) {
  if (q == 1) {
    cur.push_back(n);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    enumerate_weight_rec(n - k, q - 1, cur, out);
    cur.pop_back();
  }
}

void enumerate_bounded_rec(int n, const MultiIndex& bound, int pos,
                           std::vector<int>& cur, std::vector<MultiIndex>& out) {
  const int q = bound.size();
  if (pos == q - 1) {
    if (n <= bound[pos]) {
      cur.push_back(n);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  int hi = std::min(n, bound[pos]);
  for (int k = 0; k <= hi; ++k) {
    cur.push_back(k);
    enumerate_bounded_rec(n - k, bound, pos + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_weight(int n, int q) {
  if (n < 0 || q <= 0) throw std::invalid_argument("enumerate_weight: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  enumerate_weight_rec(n, q, cur, out);
  return out;
}

Integer count_weight(int n, int q) {
  if (n < 0 || q <= 0) throw std::invalid_argument("count_weight: bad arguments");
  return binomial_int(n + q - 1, q - 1);
}

std::vector<MultiIndex> enumerate_bounded_weight(int n, const MultiIndex& bound) {
  if (n < 0) throw std::invalid_argument("enumerate_bounded_weight: negative weight");
  if (bound.size() == 0) throw std::invalid_argument("enumerate_bounded_weight: empty bound");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  enumerate_bounded_rec(n, bound, 0, cur, out);
  return out;
}

MatrixIndex::MatrixIndex(int p, int q) : p_(p), q_(q), e_(static_cast<size_t>(p) * q, 0) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("MatrixIndex: bad shape");
}

MatrixIndex MatrixIndex::from_row(const MultiIndex& row) {
  MatrixIndex m(1, row.size());
  for (int j = 0; j < row.size(); ++j) m.set(0, j, row[j]);
  return m;
}

MatrixIndex MatrixIndex::from_rows(const std::vector<MultiIndex>& rows) {
  if (rows.empty()) throw std::invalid_argument("MatrixIndex::from_rows: no rows");
  MatrixIndex m(static_cast<int>(rows.size()), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.q_)
      throw std::invalid_argument("MatrixIndex::from_rows: ragged rows");
    for (int j = 0; j < m.q_; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
  }
  return m;
}

void MatrixIndex::set(int i, int j, int v) {
  if (v < 0) throw std::invalid_argument("MatrixIndex::set: negative entry");
  e_[static_cast<size_t>(i) * q_ + j] = v;
}

MultiIndex MatrixIndex::row(int i) const {
  std::vector<int> e(q_);
  for (int j = 0; j < q_; ++j) e[static_cast<size_t>(j)] = at(i, j);
  return MultiIndex(std::move(e));
}

MultiIndex MatrixIndex::row_totals() const {
  std::vector<int> e(p_, 0);
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < q_; ++j) e[static_cast<size_t>(i)] += at(i, j);
  return MultiIndex(std::move(e));
}

MultiIndex MatrixIndex::column_totals() const {
  std::vector<int> e(q_, 0);
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < q_; ++j) e[static_cast<size_t>(j)] += at(i, j);
  return MultiIndex(std::move(e));
}

int MatrixIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Integer MatrixIndex::factorial() const {
  Integer r(1);
  for (int v : e_) r *= factorial_int(v);
  return r;
}

MatrixIndex MatrixIndex::plus_at(int i, int j, int delta) const {
  MatrixIndex m(*this);
  int v = m.at(i, j) + delta;
  if (v < 0) throw std::invalid_argument("MatrixIndex::plus_at: negative entry");
  m.e_[static_cast<size_t>(i) * q_ + j] = v;
  return m;
}

std::string MatrixIndex::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < p_; ++i) {
    if (i) os << ";";
    os << row(i).str();
  }
  os << "]";
  return os.str();
}

namespace {

/// Fill rows of the table one at a time; `room` tracks how much of each
/// column total is still unassigned.
void margin_rec(const MultiIndex& row_totals, int i, std::vector<int>& room,
                MatrixIndex& table, std::vector<MatrixIndex>& out) {
  const int p = row_totals.size();
  const int q = static_cast<int>(room.size());
  if (i == p) {
    for (int v : room)
      if (v != 0) return;
    out.push_back(table);
    return;
  }
  // Compositions of row_totals[i] bounded entrywise by room.
  std::vector<int> row(static_cast<size_t>(q), 0);
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == q - 1) {
      if (rem > room[static_cast<size_t>(j)]) return;
      row[static_cast<size_t>(j)] = rem;
      for (int c = 0; c < q; ++c) {
        table.set(i, c, row[static_cast<size_t>(c)]);
        room[static_cast<size_t>(c)] -= row[static_cast<size_t>(c)];
      }
      margin_rec(row_totals, i + 1, room, table, out);
      for (int c = 0; c < q; ++c) {
        room[static_cast<size_t>(c)] += row[static_cast<size_t>(c)];
        table.set(i, c, 0);
      }
      row[static_cast<size_t>(j)] = 0;
      return;
    }
    int hi = std::min(rem, room[static_cast<size_t>(j)]);
    for (int k = 0; k <= hi; ++k) {
      row[static_cast<size_t>(j)] = k;
      self(self, j + 1, rem - k);
    }
    row[static_cast<size_t>(j)] = 0;
  };
  rec(rec, 0, row_totals[i]);
}

}  // namespace

std::vector<MatrixIndex> enumerate_margin_tables(const MultiIndex& row_totals,
                                                 const MultiIndex& column_totals) {
  std::vector<MatrixIndex> out;
  if (row_totals.size() == 0 || column_totals.size() == 0)
    throw std::invalid_argument("enumerate_margin_tables: empty margins");
  if (row_totals.order() != column_totals.order()) return out;
  MatrixIndex table(row_totals.size(), column_totals.size());
  std::vector<int> room(column_totals.entries().begin(), column_totals.entries().end());
  margin_rec(row_totals, 0, room, table, out);
  return out;
}

}  // namespace ladder
