#pragma once

#include "octodp/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace octodp {

/// Dense rectangular matrix of rationals, row-major.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
  friend bool operator==(const RatMatrix& lhs, const RatMatrix& rhs) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RatMatrix& m, const std::vector<Rational>& v);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. Throws PreconditionError for non-square input.
Rational det_exact(const RatMatrix& m);

/// Integer Bareiss determinant; the matrix is consumed.
Integer det_bareiss(std::vector<std::vector<Integer>> m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> null_space(const RatMatrix& m);

/// Solves m x = b for square invertible m; nullopt when singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

RatMatrix transpose(const RatMatrix& m);

}  // namespace octodp
