#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ffr {

using Coeff = mpq_class;

// The coefficient field: ℚ, or 𝔽ₚ with elements stored as residues 0..p-1.
class CoefField {
 public:
  static CoefField rationals() { return CoefField{0}; }
  static CoefField prime(unsigned long p);
  // "Q" or "Fp:<p>".
  static CoefField parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  unsigned long characteristic() const noexcept { return p_; }

  // Brings an arbitrary rational into canonical form for this field.
  void normalize(Coeff& c) const;
  Coeff from_integer(const mpz_class& z) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;  // a != 0
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string() const;

  friend bool operator==(const CoefField&, const CoefField&) = default;

 private:
  explicit CoefField(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_prime(unsigned long n);

}  // namespace ffr
