#include "ffr/matrix.hpp"

#include <bit>
#include <unordered_map>

#include "ffr/errors.hpp"

namespace ffr {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring)) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Poly>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw SchemaError("matrix rows of different lengths");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same_ring(ring, rows[i][j].ring());
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows, std::size_t cols) {
  std::vector<std::vector<Poly>> ps;
  for (const auto& r : rows) {
    ps.emplace_back();
    for (const auto& s : r) ps.back().push_back(parse_poly(s, ring));
  }
  return from_rows(ring, ps, cols);
}

Matrix Matrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<FreeModuleElem>& cols) {
  Matrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows) throw RingMismatch("column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j].coords[i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FreeModuleElem Matrix::column(std::size_t j) const {
  FreeModuleElem e{ring_, {}};
  for (std::size_t i = 0; i < rows_; ++i) e.coords.push_back(at(i, j));
  return e;
}

std::vector<FreeModuleElem> Matrix::columns() const {
  std::vector<FreeModuleElem> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::submatrix(const Subset& rows, const Subset& cols) const {
  Matrix s(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
  return s;
}

Matrix Matrix::map_to(const Ring& target) const {
  Matrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].map_to(target);
  return m;
}

Matrix Matrix::scaled(const Poly& f) const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = e * f;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw RingMismatch("matrix product of incompatible shapes");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RingMismatch("matrix sum of incompatible shapes");
  Matrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RingMismatch("matrix difference of incompatible shapes");
  Matrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string(at(i, j)));
  return out;
}

Poly determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  if (n > 30) throw PreconditionError("determinant: matrix too large for Laplace expansion");
  // det of rows [n - popcount(mask), n) restricted to the columns in mask.
  std::unordered_map<std::uint32_t, Poly> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Poly {
    const auto remaining = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = n - remaining;
    if (remaining == 1) return m.at(row, static_cast<std::size_t>(std::countr_zero(mask)));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly acc(m.ring());
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1U)) continue;
      const Poly& e = m.at(row, j);
      if (!e.is_zero()) {
        Poly sub = self(self, mask & ~(1U << j));
        if (!sub.is_zero()) acc += sign > 0 ? e * sub : -(e * sub);
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 32 ? ~0U : (1U << n) - 1U);
}

Poly minor(const Matrix& m, const Subset& rows, const Subset& cols) {
  return determinant(m.submatrix(rows, cols));
}

Matrix exterior_power(const Matrix& m, int k) {
  auto rs = subsets_colex(static_cast<int>(m.rows()), k);
  auto cs = subsets_colex(static_cast<int>(m.cols()), k);
  Matrix out(m.ring(), rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, j) = minor(m, rs[i], cs[j]);
  return out;
}

std::vector<Poly> minors_ideal_gens(const Matrix& m, int k) {
  if (k <= 0) return {Poly::constant(m.ring(), 1)};
  if (static_cast<std::size_t>(k) > std::min(m.rows(), m.cols())) return {};
  std::vector<Poly> out;
  for (const auto& r : subsets_colex(static_cast<int>(m.rows()), k))
    for (const auto& c : subsets_colex(static_cast<int>(m.cols()), k)) {
      Poly d = minor(m, r, c);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

Matrix adjugate(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("adjugate of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  Matrix adj(m.ring(), m.rows(), m.cols());
  Subset all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly c = minor(m, without(all, i), without(all, j));
      adj.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw RingMismatch("hconcat of matrices with different row counts");
  Matrix c(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw RingMismatch("vconcat of matrices with different column counts");
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
  }
  return c;
}

}  // namespace ffr
