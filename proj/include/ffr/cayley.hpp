#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ffr/complexes.hpp"
#include "ffr/exterior.hpp"

namespace ffr {

struct CayleyCheck {
  bool cayley = true;
  // Entry k-1 certifies Gr(𝔇_k) ≥ 1 for k = 1 and ≥ 2 for k ≥ 2; stops at the first failure.
  std::vector<DepthCertificate> certificates;
};
// Gr(𝔇₁) ≥ 1 and Gr(𝔇_k) ≥ 2 for k = 2..m. Length-1 complexes are accepted.
CayleyCheck is_cayley_complex(const FreeComplex& C);

struct CayleyData {
  FreeComplex complex;
  // u[k] is a column over the colex basis of Λ^{r_{k+1}} L_k, k = 0..m; u[m] = [1].
  std::vector<std::vector<Poly>> u;
  // factor_ideals[k] = coordinates of u[k] (nonzero modulo J).
  std::vector<std::vector<Poly>> factor_ideals;
  // u[0] when χ = 0.
  std::optional<Poly> det;
};
// Λ^{r_k}(A_k) = u_{k-1}·ᵗ(u_k⋆) for every k, checked by normal forms before returning.
// Throws PreconditionError when C is not a Cayley complex.
CayleyData cayley_factorize(const FreeComplex& C);

struct StrongGcd {
  Poly g;
  std::vector<Poly> cofactors;  // a_i = cofactors[i]·g in A
  DepthCertificate depth;       // Gr(cofactors) ≥ 2
};
// Verifies a candidate; without one, principal and monomial ideals supply their own.
// nullopt when no candidate is available or the certificate does not hold.
std::optional<StrongGcd> strong_gcd(const AIdeal& a, const std::optional<Poly>& candidate = std::nullopt);

struct CayleyDeterminant {
  Poly det;
  StrongGcd gcd;  // det as strong gcd of 𝔇₁
};
// Requires χ = 0. Throws VerificationFailure if the determinant fails its regularity or gcd certificate.
CayleyDeterminant cayley_determinant(const FreeComplex& C);

struct MacRaeCertificate {
  Poly e;
  std::vector<Poly> fitting;  // generators of F₀(E)
  StrongGcd gcd;
  ExactnessReport resolution;
};
// `resolution` must be exact with coker(A₁) = E and χ = 0.
MacRaeCertificate macrae_invariant(const AModule& E, const FreeComplex& resolution);

struct HilbertBurchReport {
  // Δ_i = (-1)^{i+1} det(A without row i), i 1-based: the coefficients of the first-column expansion of [X | A].
  std::vector<Poly> delta;
  bool annihilates = false;  // Δ·A = 0
  bool exact = false;        // 0 → A^{n-1} → Aⁿ → A exact, i.e. Gr(Δ) ≥ 2
  DepthCertificate depth;
  std::optional<Poly> scalar;     // a with α = a·Δ
  std::optional<StrongGcd> gcd;   // a as strong gcd of ⟨α⟩
};
HilbertBurchReport hilbert_burch(const FPAlgebra& A, const Matrix& M, const std::optional<std::vector<Poly>>& alpha = std::nullopt);

struct SylvesterComplex {
  std::size_t p = 0, q = 0, d = 0;
  std::vector<Poly> P_coeffs;  // a_p..a_0
  std::vector<Poly> Q_coeffs;  // b_q..b_0
  Matrix K;  // E → F, W ↦ (WQ, -WP)
  Matrix S;  // F → G, (U, V) ↦ UP + VQ
  FreeComplex complex;  // A₁ = S, A₂ = K
};
// P, Q are binary forms in the variables x_name, y_name; their remaining variables
// must be those of A's ring. Bases are monomials with decreasing powers of x.
SylvesterComplex sylvester_complex(const FPAlgebra& A, const Poly& P, const Poly& Q, std::size_t d,
                                   std::string_view x_name = "X", std::string_view y_name = "Y");

}  // namespace ffr
