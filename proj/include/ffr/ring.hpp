#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffr/field.hpp"
#include "ffr/monomial.hpp"

namespace ffr {

// Variables whose names start with this prefix are reserved for internally
// adjoined indeterminates and rejected in user input.
inline constexpr std::string_view kReservedPrefix = "#k";

bool is_reserved_name(std::string_view name);

class PolyRing {
 public:
  PolyRing(CoefField field, std::vector<std::string> vars, MonomialOrder order);

  const CoefField& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t arity() const noexcept { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const {
    return this == &other || (field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_);
  }

 private:
  CoefField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const PolyRing>;

// User-facing constructor: names must be identifiers and may not be reserved.
Ring make_ring(CoefField field, std::vector<std::string> vars, OrderKind kind = OrderKind::grevlex);
// Internal constructor: reserved names allowed, arbitrary block order.
Ring make_ring_unchecked(CoefField field, std::vector<std::string> vars, MonomialOrder order);

// Appends variables. A uniform order stays uniform over the larger set;
// a block order gets one extra grevlex block at the end.
Ring extend_ring(const Ring& base, const std::vector<std::string>& extra);
// Appends variables placed in a leading grevlex block that dominates the base
// order, so that they can be eliminated.
Ring elimination_ring(const Ring& base, const std::vector<std::string>& extra);
// `count` reserved names not yet used by the ring.
std::vector<std::string> fresh_names(const PolyRing& ring, std::size_t count);

void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial mono;
  Coeff coef;
};

// Sparse polynomial; terms sorted strictly descending by the ring's order,
// no zero coefficients. The zero polynomial has no terms.
class Poly {
 public:
  explicit Poly(Ring ring);

  static Poly constant(const Ring& ring, const Coeff& c);
  static Poly variable(const Ring& ring, std::size_t index);
  static Poly variable(const Ring& ring, std::string_view name);
  static Poly monomial(const Ring& ring, Monomial m, const Coeff& c = 1);
  // Normalizes coefficients, sorts and merges like terms.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Coeff& lead_coeff() const { return terms_.front().coef; }
  std::int64_t total_degree() const;  // -1 for zero
  Exponent degree_in(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Coeff& c) const;
  Poly mul_term(const Monomial& m, const Coeff& c) const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  // Re-expresses over `target` by variable name. Throws RingMismatch if a
  // variable that occurs is missing from the target.
  Poly map_to(const Ring& target) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(Ring ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  Ring ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Poly& f);
Poly parse_poly(std::string_view src, const Ring& ring, bool allow_reserved = false);

// Nonzero scalar coefficients of f.
std::vector<Coeff> content_ideal(const Poly& f);
// Coefficients of f viewed as a polynomial in the variables `wrt` (returned
// inside the same ring, free of those variables), in a fixed deterministic order.
std::vector<Poly> content_ideal(const Poly& f, const std::vector<std::string>& wrt);

// a₁ + a₂T + ... + aₙT^{n-1} over the ring extended by `fresh_var`.
Poly kronecker_poly(const Ring& base, std::span<const Poly> gens, std::string_view fresh_var);
// Same with an explicit target ring already containing the variable.
Poly kronecker_poly_in(const Ring& target, std::span<const Poly> gens, std::size_t var);

// f / g when g divides f exactly, otherwise nullopt.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

}  // namespace ffr
