#pragma once

#include <optional>
#include <vector>

#include "ffr/depth.hpp"
#include "ffr/matrix.hpp"

namespace ffr {

// 0 → L_m → … → L_1 → L_0 with L_k = A^{p_k}; maps()[k-1] is A_k, of size p_{k-1} × p_k.
// A_k·A_{k+1} = 0 in A is checked on construction.
class FreeComplex {
 public:
  // `base_size` is p_0 and only consulted when there are no maps.
  // `ranks`, when given, must be r_0..r_{m+1} and agree with the sizes.
  FreeComplex(FPAlgebra algebra, std::vector<Matrix> maps, std::optional<std::vector<int>> ranks = std::nullopt,
              std::size_t base_size = 0);

  const FPAlgebra& algebra() const noexcept { return algebra_; }
  const Ring& ring() const noexcept { return algebra_.ring(); }
  std::size_t length() const noexcept { return maps_.size(); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  // 1-based: map(k) = A_k.
  const Matrix& map(std::size_t k) const { return maps_.at(k - 1); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  // r_0..r_{m+1}.
  const std::vector<int>& expected_ranks() const noexcept { return ranks_; }

 private:
  FPAlgebra algebra_;
  std::vector<Matrix> maps_;
  std::vector<std::size_t> sizes_;
  std::vector<int> ranks_;
};

// r_k = Σ_{j≥k} (-1)^{j-k} p_j for k = 0..m+1; throws PreconditionError when one is negative.
std::vector<int> expected_ranks(const std::vector<std::size_t>& sizes);
int euler_characteristic(const FreeComplex& C);

AIdeal determinantal_ideal(const FPAlgebra& A, const Matrix& M, int k);
// F_n(E) = D_{q-n}(G) for E = coker G, G of size q × m.
AIdeal fitting_ideal(const AModule& E, int n);

// D_r(M) is faithful.
bool stable_rank_at_least(const FPAlgebra& A, const Matrix& M, int r);
// ... and D_{r+1}(M) = 0.
bool is_stable_rank(const FPAlgebra& A, const Matrix& M, int r);
// M is injective iff D_{cols}(M) is faithful.
bool mccoy_injective(const FPAlgebra& A, const Matrix& M);

// D_{r_k - shift}(A_k); ⟨1⟩ for k beyond the length.
AIdeal characteristic_ideal(const FreeComplex& C, std::size_t k, int shift = 0);

struct ExactnessRecord {
  std::size_t index = 0;  // ℓ
  std::vector<Poly> ideal;
  std::size_t required_depth = 0;
  DepthCertificate certificate;
};

struct ExactnessReport {
  bool exact = true;
  // Stops at the first failing ℓ.
  std::vector<ExactnessRecord> records;
};

// Exact iff Gr(𝔇_ℓ) ≥ ℓ for ℓ = 1..m.
ExactnessReport certify_exact(const FreeComplex& C);

// Adds A^s to L_k and L_{k+1} joined by the identity; requires 1 ≤ k ≤ m-1.
FreeComplex elementary_modification(const FreeComplex& C, std::size_t k, std::size_t s);

// Descending Koszul complex, L_k = Λ^k A^n in the colex basis.
FreeComplex koszul_complex(const FPAlgebra& A, const std::vector<Poly>& seq);

// Pfaffian of an antisymmetric matrix of even size (1 for size 0, 0 for odd size).
Poly pfaffian(const Matrix& X);

struct PfaffianData {
  Matrix Q;                 // 1 × n, q_i = (-1)^i pf(X without row and column i), i 1-based
  bool annihilates = false; // Q·X = 0
  bool adjugate = false;    // adj(X) = ᵗQ·Q
  std::optional<FreeComplex> complex;  // 0 → A → Aⁿ → Aⁿ → A with maps ᵗQ, X, Q
};
PfaffianData pfaffian_data(const FPAlgebra& A, const Matrix& X);

}  // namespace ffr
