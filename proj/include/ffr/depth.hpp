#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffr/algebra.hpp"
#include "ffr/matrix.hpp"

namespace ffr {

// k polynomials f_i = a₁ + a₂T_i + … + a_mT_i^{m-1}, one fresh variable T_i per polynomial.
struct KroneckerSequence {
  Ring ring;  // base variables followed by the fresh ones
  std::vector<std::string> fresh;
  std::vector<Poly> polys;
};

KroneckerSequence kronecker_sequence(const AIdeal& a, std::size_t k);

// Verdict of "the sequence is E-regular" / "Gr(𝔞, E) ≥ k".
// On failure, `witness` is nonzero in E/⟨f₁..f_{j-1}⟩E and killed by f_j
// (j = failed_index, 1-based), both facts re-verified before returning.
struct DepthCertificate {
  bool holds = true;
  std::size_t requested = 0;
  std::size_t failed_index = 0;
  std::vector<Poly> sequence;
  std::optional<FreeModuleElem> witness;
  // Set when the verdict came from 𝔞E = E rather than from a sequence.
  bool infinite = false;
};

// The sequence may live over a ring extending E's ring; E is extended verbatim.
DepthCertificate is_E_regular_sequence(const std::vector<Poly>& seq, const AModule& E);

DepthCertificate depth_at_least(const AIdeal& a, const AModule& E, std::size_t k);

struct DepthValue {
  bool infinite = false;
  std::size_t value = 0;
  DepthCertificate certificate;  // the run that pinned the value
};
DepthValue depth_value(const AIdeal& a, const AModule& E);

// Generators with the same radical as 𝔞 + J (modulo J), reduced and greedily
// pruned; used internally by the depth procedures since depth only depends on the radical.
std::vector<Poly> radical_generators(const AIdeal& a);

struct Regularization {
  Matrix transform;         // unitriangular k×k over A[X₁..X_ℓ]
  std::vector<Poly> b;      // transform · (a₁..a_k)
  DepthCertificate check;   // (b₁..b_ℓ) is E-regular
};
Regularization triangular_regularization(const AIdeal& a, const AModule& E, std::size_t l);

bool is_completely_secant(const std::vector<Poly>& seq, const AModule& E);

// 1 ∈ I_k for the chain I_{-1} = J, I_i = (I_{i-1} : x_i^∞) + ⟨x_i⟩.
bool is_singular_sequence(const std::vector<Poly>& seq, const FPAlgebra& A);

struct WiebeReport {
  bool secant = false;           // c is completely E-secant
  bool colon_by_det = false;     // (𝔠E : Δ) = 𝔞E
  bool colon_by_ideal = false;   // (𝔠E : 𝔞) = (⟨Δ⟩ + 𝔠)E
  std::optional<Poly> det;
  std::vector<std::string> counterexamples;
  bool holds() const { return secant && colon_by_det && colon_by_ideal; }
};
// U is n×n with ᵗc = U·ᵗa.
WiebeReport wiebe_check(const std::vector<Poly>& c, const std::vector<Poly>& a, const Matrix& U, const AModule& E);

struct DepthDimReport {
  int krull_dim = 0;
  std::size_t n = 0;
  bool unit_ideal = false;
  DepthCertificate at_least;                 // Gr ≥ n - dim
  std::optional<DepthCertificate> next;      // Gr ≥ n - dim + 1, expected to fail
  bool holds = false;
};
DepthDimReport depth_dim_identity(const AIdeal& a);

}  // namespace ffr
