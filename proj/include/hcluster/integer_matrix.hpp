#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hcluster {

// Dense row-major integer matrix. Arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::int64_t> row(std::size_t r) const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::string to_string(const IntMatrix& m);

// Fraction-free (Bareiss) elimination. Throws std::invalid_argument for a
// non-square matrix.
std::int64_t determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +1 or -1, computed with integer row
// operations only (Euclidean pivoting). Throws std::domain_error when the
// matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace hcluster
