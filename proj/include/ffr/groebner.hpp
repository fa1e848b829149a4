#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ffr/ring.hpp"

namespace ffr {

class GroebnerBasis;

// Generators of an ideal of a polynomial ring. Immutable; owns a lazily
// computed reduced Gröbner basis (computed at most once, thread-safe).
class IdealGens {
 public:
  explicit IdealGens(Ring ring, std::vector<Poly> gens = {});

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }

  const GroebnerBasis& groebner() const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Poly> basis);
  ~GroebnerBasis();
  GroebnerBasis(const GroebnerBasis&);
  GroebnerBasis& operator=(const GroebnerBasis&);
  GroebnerBasis(GroebnerBasis&&) noexcept;
  GroebnerBasis& operator=(GroebnerBasis&&) noexcept;

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_one(); }
  bool is_zero() const { return basis_.empty(); }

  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }

 private:
  struct Index;
  Ring ring_;
  std::vector<Poly> basis_;
  std::unique_ptr<Index> index_;
};

GroebnerBasis buchberger(const IdealGens& ideal);
// Throws RingMismatch if f and G do not share ring and order.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// ---- ideal calculus

bool ideal_contains(const IdealGens& ideal, const Poly& f);
// J ⊆ I.
bool ideal_contains(const IdealGens& ideal, const IdealGens& sub);
bool ideal_equal(const IdealGens& a, const IdealGens& b);
bool is_unit_ideal(const IdealGens& ideal);

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b);
IdealGens ideal_product(const IdealGens& a, const IdealGens& b);
IdealGens ideal_power(const IdealGens& a, unsigned e);
IdealGens ideal_intersection(const IdealGens& a, const IdealGens& b);
// (I : J) = {f | fJ ⊆ I}, via intersections with principal ideals.
IdealGens ideal_colon(const IdealGens& ideal, const IdealGens& by);
IdealGens ideal_colon(const IdealGens& ideal, const Poly& f);
// (I : f^∞) by one-shot Rabinowitsch elimination.
IdealGens saturation(const IdealGens& ideal, const Poly& f);
// (I : f^∞) by iterating (I : f) until it stabilizes. Slower; kept as an oracle.
IdealGens saturation_by_iteration(const IdealGens& ideal, const Poly& f);
// The part of the ideal free of the given variables (an elimination order is used internally).
IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& vars);

// Leading monomials of the reduced Gröbner basis.
IdealGens initial_ideal(const IdealGens& ideal);
// Dimension of R/I; -1 iff 1 ∈ I.
int krull_dimension(const IdealGens& ideal);
bool radical_membership(const Poly& f, const IdealGens& ideal);

// ---- free modules

struct FreeModuleElem {
  Ring ring;
  std::vector<Poly> coords;

  static FreeModuleElem zero(const Ring& ring, std::size_t rank);
  static FreeModuleElem unit(const Ring& ring, std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords.size(); }
  bool is_zero() const;
  FreeModuleElem scaled(const Poly& f) const;
  FreeModuleElem& operator+=(const FreeModuleElem& o);
  FreeModuleElem& operator-=(const FreeModuleElem& o);
  friend FreeModuleElem operator+(FreeModuleElem a, const FreeModuleElem& b) { return a += b; }
  friend FreeModuleElem operator-(FreeModuleElem a, const FreeModuleElem& b) { return a -= b; }
  FreeModuleElem map_to(const Ring& target) const;
  friend bool operator==(const FreeModuleElem&, const FreeModuleElem&) = default;
};

// Reduced Gröbner basis of a submodule of R^rank (position-over-term).
class ModuleGB {
 public:
  ModuleGB(Ring ring, std::size_t rank, const std::vector<FreeModuleElem>& gens);
  ~ModuleGB();
  ModuleGB(ModuleGB&&) noexcept;
  ModuleGB& operator=(ModuleGB&&) noexcept;

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  std::vector<FreeModuleElem> basis() const;
  std::size_t size() const;

  FreeModuleElem reduce(const FreeModuleElem& v) const;
  bool contains(const FreeModuleElem& v) const { return reduce(v).is_zero(); }
  // Every standard basis vector belongs to the submodule.
  bool is_everything() const;

 private:
  struct Impl;
  Ring ring_;
  std::size_t rank_;
  std::unique_ptr<Impl> impl_;
};

// Solves Σ cᵢ gᵢ = v for many right-hand sides against one generator list.
class Lifter {
 public:
  Lifter(Ring ring, std::size_t rank, std::vector<FreeModuleElem> gens);
  ~Lifter();
  Lifter(Lifter&&) noexcept;
  Lifter& operator=(Lifter&&) noexcept;

  // Coefficients verified by re-substitution, or nullopt when v is not a member.
  std::optional<std::vector<Poly>> lift(const FreeModuleElem& v) const;
  // Generators of the syzygy module of the generator list.
  std::vector<FreeModuleElem> syzygies() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<FreeModuleElem> syzygy_module(const std::vector<FreeModuleElem>& vectors);
std::optional<std::vector<Poly>> module_membership(const FreeModuleElem& v, const std::vector<FreeModuleElem>& gens);

// {v ∈ R^rank : f v ∈ N}.
std::vector<FreeModuleElem> module_quotient(const Ring& ring, std::size_t rank,
                                            const std::vector<FreeModuleElem>& submodule, const Poly& f);
std::vector<FreeModuleElem> module_intersection(const Ring& ring, std::size_t rank,
                                                const std::vector<FreeModuleElem>& a,
                                                const std::vector<FreeModuleElem>& b);

}  // namespace ffr
