#include "quadric/linalg.hpp"

#include <utility>

namespace quadric::linalg {

namespace {

struct Echelon {
  std::vector<std::size_t> pivot_cols;
};

Echelon reduce(Matrix& a, std::vector<Scalar>* b) {
  Echelon e;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    if (b) std::swap((*b)[pivot], (*b)[r]);
    const Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!a[r][k].is_zero()) a[r][k] *= inv;
    }
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= factor * a[r][k];
      }
      if (b) (*b)[i] -= factor * (*b)[r];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_leftmost(Matrix a, std::vector<Scalar> b, std::size_t cols) {
  Echelon e = reduce(a, &b);
  for (std::size_t i = e.pivot_cols.size(); i < b.size(); ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = b[r];
  return x;
}

std::size_t rank(Matrix a) { return reduce(a, nullptr).pivot_cols.size(); }

}  // namespace quadric::linalg
