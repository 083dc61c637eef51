#include "syzflip/linalg.hpp"

#include "syzflip/error.hpp"

namespace syzflip {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const FieldElement inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    // Columns of the pivot row that are nonzero; rows are sparse in practice.
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) support.push_back(c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c : support) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<std::vector<FieldElement>> nullspace(Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.field()));
    v[free] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElement>> solve(const Matrix& m,
                                               const std::vector<FieldElement>& b) {
  if (b.size() != m.rows()) throw InvalidArgument("right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), FieldElement::zero(m.field()));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace syzflip
