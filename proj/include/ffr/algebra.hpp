#pragma once

#include <vector>

#include "ffr/groebner.hpp"

namespace ffr {

// A = k[X]/J. Every computation over A is carried out in k[X] with J adjoined;
// elements of A are represented by polynomials, compared through normal forms.
class FPAlgebra {
 public:
  explicit FPAlgebra(Ring ring, std::vector<Poly> relations = {});

  const Ring& ring() const noexcept { return ring_; }
  const IdealGens& relations() const noexcept { return relations_; }

  Poly reduce(const Poly& f) const;
  bool is_zero(const Poly& f) const { return reduce(f).is_zero(); }
  bool equal(const Poly& f, const Poly& g) const { return is_zero(f - g); }
  bool is_trivial() const { return is_unit_ideal(relations_); }

  // The same algebra after adjoining free variables: k[X,T]/J·k[X,T].
  FPAlgebra extended(const std::vector<std::string>& vars) const;
  FPAlgebra over(const Ring& larger) const;

  // ⟨gens⟩ + J inside k[X].
  IdealGens lift_ideal(const std::vector<Poly>& gens) const;

  friend bool operator==(const FPAlgebra& a, const FPAlgebra& b);

 private:
  Ring ring_;
  IdealGens relations_;
};

struct AIdeal {
  FPAlgebra algebra;
  std::vector<Poly> gens;

  IdealGens lifted() const { return algebra.lift_ideal(gens); }
};

// E = A^rank / (span of the columns). The columns are the relations of E;
// together with J·A^rank they generate the submodule N of k[X]^rank with E = k[X]^rank / N.
struct AModule {
  FPAlgebra algebra;
  std::size_t rank = 0;
  std::vector<FreeModuleElem> columns;

  static AModule free(const FPAlgebra& algebra, std::size_t rank);
  // Row-major rows x cols matrix whose columns are the relations.
  static AModule cokernel(const FPAlgebra& algebra, const std::vector<std::vector<Poly>>& rows);
  // A/⟨gens⟩.
  static AModule quotient(const FPAlgebra& algebra, const std::vector<Poly>& gens);

  const Ring& ring() const { return algebra.ring(); }
  // Generators of N: the columns plus J·e_i.
  std::vector<FreeModuleElem> relation_module() const;
  AModule over(const Ring& larger) const;
  // E / ⟨gens⟩E.
  AModule modulo(const std::vector<Poly>& gens) const;
};

bool is_trivial(const FPAlgebra& A);
// (J : f) = J.
bool is_regular_element(const FPAlgebra& A, const Poly& f);
// (J : 𝔞) = J.
bool is_faithful_ideal(const FPAlgebra& A, const AIdeal& a);

// f is injective on E: (N : f) ⊆ N.
bool is_regular_on(const AModule& E, const Poly& f);
// 𝔞 is faithful on E: (N : 𝔞) ⊆ N.
bool is_faithful_on(const AModule& E, const std::vector<Poly>& gens);

// Generators of (0 :_E f), as vectors of k[X]^rank that are nonzero in E.
std::vector<FreeModuleElem> module_colon_element(const AModule& E, const Poly& f);
// Generators of (N : 𝔞) in k[X]^rank, i.e. the preimage of (0 :_E 𝔞).
std::vector<FreeModuleElem> module_colon_ideal(const AModule& E, const std::vector<Poly>& gens);

// 𝔞E = E.
bool ideal_times_module_is_module(const AIdeal& a, const AModule& E);
// Ann(E) as an ideal of k[X] containing J.
IdealGens annihilator(const AModule& E);

// Membership of v in the submodule 𝔞E + N of k[X]^rank.
bool in_ideal_times_module(const FreeModuleElem& v, const std::vector<Poly>& gens, const AModule& E);

}  // namespace ffr
