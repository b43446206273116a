#include "ladder/linalg.hpp"

namespace ladder {

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, int ncols) {
  const int nrows = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != ncols)
      throw std::invalid_argument("nullspace: ragged matrix");

  // Reduced row echelon form.
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(r)]);
    Rational d = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int j = c; j < ncols; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(j)] /= d;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < ncols; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<Rational> v(static_cast<size_t>(ncols), Rational(0));
    v[static_cast<size_t>(fc)] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      int pc = pivot_col_of_row[i];
      v[static_cast<size_t>(pc)] = -a[i][static_cast<size_t>(fc)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CMatD to_double(const CMatX& m) {
  CMatD r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_complex();
  return r;
}

}  // namespace ladder
