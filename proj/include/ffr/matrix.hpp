#pragma once

#include <vector>

#include "ffr/groebner.hpp"
#include "ffr/subsets.hpp"

namespace ffr {

// Dense matrix of polynomials, row-major. Zero-sized shapes are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Poly>>& rows, std::size_t cols = 0);
  // Parses each entry with parse_poly.
  static Matrix parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows, std::size_t cols = 0);
  static Matrix from_columns(const Ring& ring, std::size_t rows, const std::vector<FreeModuleElem>& cols);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Matrix transpose() const;
  FreeModuleElem column(std::size_t j) const;
  std::vector<FreeModuleElem> columns() const;
  Matrix submatrix(const Subset& rows, const Subset& cols) const;
  Matrix map_to(const Ring& target) const;
  Matrix scaled(const Poly& f) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

// Laplace expansion along rows, memoized on the set of remaining columns.
Poly determinant(const Matrix& m);
Poly minor(const Matrix& m, const Subset& rows, const Subset& cols);
// Λ^k of the map: rows indexed by colex k-subsets of rows, columns by colex k-subsets of columns.
Matrix exterior_power(const Matrix& m, int k);
// Generators of D_k(M): ⟨1⟩ for k ≤ 0, ⟨0⟩ beyond the smaller dimension, otherwise the nonzero k-minors.
std::vector<Poly> minors_ideal_gens(const Matrix& m, int k);
// Classical adjugate (transpose of the cofactor matrix).
Matrix adjugate(const Matrix& m);

// Block diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);
// [a b] and [a; b].
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

}  // namespace ffr
