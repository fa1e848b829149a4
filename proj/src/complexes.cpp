#include "ffr/complexes.hpp"

#include <string>

#include "ffr/errors.hpp"

namespace ffr {

namespace {

bool matrix_vanishes(const FPAlgebra& A, const Matrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!A.is_zero(M.at(i, j))) return false;
  return true;
}

Matrix zeros(const Ring& R, std::size_t rows, std::size_t cols) { return Matrix(R, rows, cols); }

}  // namespace

std::vector<int> expected_ranks(const std::vector<std::size_t>& sizes) {
  const std::size_t m = sizes.empty() ? 0 : sizes.size() - 1;
  std::vector<int> r(m + 2, 0);
  for (std::size_t k = m + 1; k-- > 0;) {
    r[k] = static_cast<int>(sizes[k]) - r[k + 1];
    if (r[k] < 0)
      throw PreconditionError("expected rank r_" + std::to_string(k) + " is negative: the ring would be trivial");
  }
  return r;
}

FreeComplex::FreeComplex(FPAlgebra algebra, std::vector<Matrix> maps, std::optional<std::vector<int>> ranks,
                         std::size_t base_size)
    : algebra_(std::move(algebra)), maps_(std::move(maps)) {
  sizes_.push_back(maps_.empty() ? base_size : maps_.front().rows());
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const Matrix& M = maps_[k];
    require_same_ring(algebra_.ring(), M.ring());
    if (M.rows() != sizes_.back())
      throw PreconditionError("map A_" + std::to_string(k + 1) + " has " + std::to_string(M.rows()) + " rows, expected " +
                              std::to_string(sizes_.back()));
    sizes_.push_back(M.cols());
    if (k > 0 && !matrix_vanishes(algebra_, maps_[k - 1] * M))
      throw PreconditionError("A_" + std::to_string(k) + "·A_" + std::to_string(k + 1) + " is not zero");
  }
  ranks_ = ffr::expected_ranks(sizes_);
  if (ranks && *ranks != ranks_) throw PreconditionError("supplied expected ranks disagree with the module sizes");
}

int euler_characteristic(const FreeComplex& C) { return C.expected_ranks().front(); }

AIdeal determinantal_ideal(const FPAlgebra& A, const Matrix& M, int k) {
  require_same_ring(A.ring(), M.ring());
  std::vector<Poly> gens;
  for (auto& g : minors_ideal_gens(M, k)) {
    Poly r = A.reduce(g);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return AIdeal{A, std::move(gens)};
}

AIdeal fitting_ideal(const AModule& E, int n) {
  Matrix G = Matrix::from_columns(E.ring(), E.rank, E.columns);
  return determinantal_ideal(E.algebra, G, static_cast<int>(E.rank) - n);
}

bool stable_rank_at_least(const FPAlgebra& A, const Matrix& M, int r) {
  return is_faithful_ideal(A, determinantal_ideal(A, M, r));
}

bool is_stable_rank(const FPAlgebra& A, const Matrix& M, int r) {
  return stable_rank_at_least(A, M, r) && determinantal_ideal(A, M, r + 1).gens.empty();
}

bool mccoy_injective(const FPAlgebra& A, const Matrix& M) {
  return stable_rank_at_least(A, M, static_cast<int>(M.cols()));
}

AIdeal characteristic_ideal(const FreeComplex& C, std::size_t k, int shift) {
  if (k == 0 || k > C.length()) return AIdeal{C.algebra(), {Poly::constant(C.ring(), 1)}};
  return determinantal_ideal(C.algebra(), C.map(k), C.expected_ranks()[k] - shift);
}

ExactnessReport certify_exact(const FreeComplex& C) {
  ExactnessReport rep;
  const AModule A1 = AModule::free(C.algebra(), 1);
  for (std::size_t l = 1; l <= C.length(); ++l) {
    ExactnessRecord rec;
    rec.index = l;
    rec.required_depth = l;
    AIdeal D = characteristic_ideal(C, l);
    rec.ideal = D.gens;
    rec.certificate = depth_at_least(D, A1, l);
    const bool ok = rec.certificate.holds;
    rep.records.push_back(std::move(rec));
    if (!ok) {
      rep.exact = false;
      break;
    }
  }
  return rep;
}

FreeComplex elementary_modification(const FreeComplex& C, std::size_t k, std::size_t s) {
  const std::size_t m = C.length();
  if (k < 1 || k + 1 > m) throw PreconditionError("elementary modification needs 1 ≤ k ≤ m-1");
  const Ring& R = C.ring();
  std::vector<Matrix> maps = C.maps();
  const auto& p = C.sizes();
  maps[k - 1] = hconcat(C.map(k), zeros(R, p[k - 1], s));
  maps[k] = block_diag(C.map(k + 1), Matrix::identity(R, s));
  if (k + 2 <= m) maps[k + 1] = vconcat(C.map(k + 2), zeros(R, s, p[k + 2]));
  return FreeComplex(C.algebra(), std::move(maps));
}

FreeComplex koszul_complex(const FPAlgebra& A, const std::vector<Poly>& seq) {
  const Ring& R = A.ring();
  const int n = static_cast<int>(seq.size());
  std::vector<Matrix> maps;
  for (int k = 1; k <= n; ++k) {
    auto src = subsets_colex(n, k);
    Matrix M(R, subsets_colex(n, k - 1).size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Subset& I = src[c];
      for (std::size_t pos = 0; pos < I.size(); ++pos) {
        const Poly& a = seq[static_cast<std::size_t>(I[pos])];
        M.at(colex_rank(without(I, I[pos])), c) = pos % 2 ? -a : a;
      }
    }
    maps.push_back(std::move(M));
  }
  return FreeComplex(A, std::move(maps), std::nullopt, 1);
}

Poly pfaffian(const Matrix& X) {
  const std::size_t n = X.rows();
  if (X.cols() != n) throw PreconditionError("pfaffian of a non-square matrix");
  if (n == 0) return Poly::constant(X.ring(), 1);
  if (n % 2) return Poly(X.ring());
  // Expansion along the first row.
  Poly acc(X.ring());
  for (std::size_t j = 1; j < n; ++j) {
    if (X.at(0, j).is_zero()) continue;
    Subset rest;
    for (std::size_t i = 1; i < n; ++i)
      if (i != j) rest.push_back(static_cast<int>(i));
    Poly t = X.at(0, j) * pfaffian(X.submatrix(rest, rest));
    acc += (j % 2) ? t : -t;
  }
  return acc;
}

PfaffianData pfaffian_data(const FPAlgebra& A, const Matrix& X) {
  const std::size_t n = X.rows();
  if (X.cols() != n || n % 2 == 0) throw PreconditionError("pfaffian data needs a square matrix of odd size");
  if (!(X + X.transpose()).is_zero())
    throw PreconditionError("pfaffian data needs an antisymmetric matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (!X.at(i, i).is_zero()) throw PreconditionError("pfaffian data needs a zero diagonal");
  const Ring& R = X.ring();
  PfaffianData out{Matrix(R, 1, n), false, false, std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    Subset rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(static_cast<int>(j));
    Poly pf = pfaffian(X.submatrix(rest, rest));
    // (-1)^i with i 1-based.
    out.Q.at(0, i) = (i % 2 == 0) ? -pf : pf;
  }
  out.annihilates = matrix_vanishes(A, out.Q * X);
  out.adjugate = matrix_vanishes(A, adjugate(X) - out.Q.transpose() * out.Q);
  if (out.annihilates) out.complex.emplace(A, std::vector<Matrix>{out.Q, X, out.Q.transpose()});
  return out;
}

}  // namespace ffr
