#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "syzflip/field.hpp"

namespace syzflip {

/// Dense row-major matrix of exact field elements.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transposed() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<FieldElement>> nullspace(Matrix m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve(const Matrix& m,
                                               const std::vector<FieldElement>& b);

}  // namespace syzflip
