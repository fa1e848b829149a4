#include "ffr/field.hpp"

#include <charconv>

#include "ffr/errors.hpp"

namespace ffr {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefField CoefField::prime(unsigned long p) {
  if (!is_prime(p)) throw SchemaError("field characteristic " + std::to_string(p) + " is not prime");
  return CoefField{p};
}

CoefField CoefField::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw SchemaError("bad field spec '" + std::string(text) + "'");
    return prime(p);
  }
  throw SchemaError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

void CoefField::normalize(Coeff& c) const {
  if (p_ == 0) {
    c.canonicalize();
    return;
  }
  const mpz_class p{p_};
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw SchemaError("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  c = Coeff{num};
}

Coeff CoefField::from_integer(const mpz_class& z) const {
  Coeff c{z};
  normalize(c);
  return c;
}

Coeff CoefField::add(const Coeff& a, const Coeff& b) const {
  Coeff r = a + b;
  if (p_ != 0 && r >= p_) r -= p_;
  return r;
}

Coeff CoefField::sub(const Coeff& a, const Coeff& b) const {
  Coeff r = a - b;
  if (p_ != 0 && r < 0) r += p_;
  return r;
}

Coeff CoefField::mul(const Coeff& a, const Coeff& b) const {
  Coeff r = a * b;
  if (p_ != 0) normalize(r);
  return r;
}

Coeff CoefField::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Coeff{mpz_class{p_}} - a;
}

Coeff CoefField::inv(const Coeff& a) const {
  if (p_ == 0) return 1 / a;
  mpz_class r;
  const mpz_class p{p_};
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Coeff{r};
}

std::string CoefField::to_string() const {
  return p_ == 0 ? std::string{"Q"} : "Fp:" + std::to_string(p_);
}

}  // namespace ffr
