#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ffr/complexes.hpp"

namespace ffr {

// Monic monomials m_1..m_r in the order given.
struct MonomialList {
  Ring ring;
  std::vector<Monomial> monomials;

  // Each polynomial must be a single term with coefficient 1.
  static MonomialList from_polys(const std::vector<Poly>& polys);
  // Comma-separated monomials, e.g. "x^2*y,x*y^3".
  static MonomialList parse(const Ring& ring, std::string_view src);

  std::size_t size() const noexcept { return monomials.size(); }
  Poly poly(std::size_t i) const { return Poly::monomial(ring, monomials[i]); }
  // lcm of m_j, j ∈ J; 1 for J = ∅.
  Monomial lcm_of(const Subset& J) const;
};

// m_{ij} e_i - m_{ji} e_j for i < j with m_{ij} = lcm(m_i, m_j) / m_i.
std::vector<FreeModuleElem> monomial_syzygies(const MonomialList& m);

// Sparse element Σ c_J e_J of the Taylor complex; all subsets have the same size.
using TaylorChain = std::map<Subset, Poly>;

struct TaylorComplex {
  MonomialList gens;
  // L_k has basis e_J for the colex k-subsets J of {0..r-1}; complex.map(k) uses that layout.
  FreeComplex complex;

  // deg lcm(m_J): every differential preserves this weight.
  std::int64_t weight(const Subset& J) const { return gens.lcm_of(J).degree(); }
  // d(e_J) = Σ_{j∈J} (-1)^{#{k∈J : k<j}} lcm(m_J)/lcm(m_{J∖j}) e_{J∖j}; d(e_∅) = 0.
  TaylorChain d(const TaylorChain& x) const;
  // h(p e_J) = lcm(m_J)p/lcm(m_{J∪i}) e_{J∪i} for the least i with m_i | lcm(m_J)p
  // when i exists and is not in J, 0 otherwise; extended coefficient-linearly.
  TaylorChain h(const Monomial& p, const Subset& J) const;
  TaylorChain h(const TaylorChain& x) const;
};

TaylorComplex taylor_complex(const MonomialList& m);

struct HomotopyCheck {
  bool holds = true;
  std::size_t checked = 0;
  // Grade-0 samples p e_∅ with p outside ⟨m⟩: the complex augments to A/⟨m⟩, so these are not asserted.
  std::size_t skipped = 0;
  std::optional<std::pair<Monomial, Subset>> counterexample;
};
// (d∘h + h∘d)(p e_J) = p e_J on every sample.
HomotopyCheck homotopy_identity_check(const TaylorComplex& T, const std::vector<std::pair<Monomial, Subset>>& samples);
// Every basis element e_J against every p in `ps`.
HomotopyCheck homotopy_identity_check(const TaylorComplex& T, const std::vector<Monomial>& ps);

// For all J and j ∈ J, m_j does not divide lcm(m_{J∖j}).
bool is_taylor_minimal(const MonomialList& m);

}  // namespace ffr
