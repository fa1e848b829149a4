#include "ffr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ffr/errors.hpp"

namespace ffr {

bool is_reserved_name(std::string_view name) { return name.substr(0, kReservedPrefix.size()) == kReservedPrefix; }

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

PolyRing::PolyRing(CoefField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  std::set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second) throw SchemaError("duplicate variable '" + v + "'");
  if (order_.arity() != vars_.size()) throw PreconditionError("monomial order arity differs from variable count");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Ring make_ring(CoefField field, std::vector<std::string> vars, OrderKind kind) {
  for (const auto& v : vars) {
    if (is_reserved_name(v)) throw SchemaError("variable name '" + v + "' uses the reserved prefix");
    if (!is_identifier(v)) throw SchemaError("variable name '" + v + "' is not an identifier");
  }
  auto n = vars.size();
  return std::make_shared<const PolyRing>(field, std::move(vars), MonomialOrder::uniform(kind, n));
}

Ring make_ring_unchecked(CoefField field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(vars), std::move(order));
}

Ring extend_ring(const Ring& base, const std::vector<std::string>& extra) {
  auto vars = base->vars();
  vars.insert(vars.end(), extra.begin(), extra.end());
  const auto& bo = base->order();
  if (bo.is_uniform()) return make_ring_unchecked(base->field(), vars, MonomialOrder::uniform(bo.leading_kind(), vars.size()));
  auto blocks = bo.block_list();
  MonomialOrder::Block tail{OrderKind::grevlex, {}};
  for (std::size_t i = 0; i < extra.size(); ++i) tail.vars.push_back(base->arity() + i);
  blocks.push_back(std::move(tail));
  return make_ring_unchecked(base->field(), vars, MonomialOrder::blocks(std::move(blocks), vars.size()));
}

Ring elimination_ring(const Ring& base, const std::vector<std::string>& extra) {
  auto vars = base->vars();
  vars.insert(vars.end(), extra.begin(), extra.end());
  std::vector<MonomialOrder::Block> blocks;
  MonomialOrder::Block head{OrderKind::grevlex, {}};
  for (std::size_t i = 0; i < extra.size(); ++i) head.vars.push_back(base->arity() + i);
  blocks.push_back(std::move(head));
  const auto& bo = base->order();
  if (base->arity() > 0) {
    if (bo.block_list().empty()) {
      MonomialOrder::Block b{OrderKind::grevlex, {}};
      for (std::size_t i = 0; i < base->arity(); ++i) b.vars.push_back(i);
      blocks.push_back(std::move(b));
    } else {
      for (const auto& b : bo.block_list()) blocks.push_back(b);
    }
  }
  return make_ring_unchecked(base->field(), vars, MonomialOrder::blocks(std::move(blocks), vars.size()));
}

std::vector<std::string> fresh_names(const PolyRing& ring, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    std::string name = std::string(kReservedPrefix) + std::to_string(i);
    if (!ring.index_of(name)) out.push_back(std::move(name));
  }
  return out;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.get() != b.get() && !a->same_as(*b)) throw RingMismatch("polynomials live over different rings");
}

// ---------------------------------------------------------------- Poly

namespace {

struct TermGreater {
  const MonomialOrder* order;
  bool operator()(const Term& a, const Term& b) const { return order->compare(a.mono, b.mono) > 0; }
};

std::vector<Term> merge(const CoefField& k, const MonomialOrder& ord, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].mono, subtract ? k.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      Coeff s = subtract ? k.sub(a[i].coef, b[j].coef) : k.add(a[i].coef, b[j].coef);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mono, subtract ? k.neg(b[j].coef) : b[j].coef});
  return out;
}

}  // namespace

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly Poly::constant(const Ring& ring, const Coeff& c) {
  Coeff v = c;
  ring->field().normalize(v);
  if (v == 0) return Poly(ring);
  return Poly(ring, {Term{Monomial(ring->arity()), std::move(v)}});
}

Poly Poly::variable(const Ring& ring, std::size_t index) {
  return Poly(ring, {Term{Monomial::variable(ring->arity(), index), Coeff{1}}});
}

Poly Poly::variable(const Ring& ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw RingMismatch("unknown variable '" + std::string(name) + "'");
  return variable(ring, *idx);
}

Poly Poly::monomial(const Ring& ring, Monomial m, const Coeff& c) {
  if (m.arity() != ring->arity()) throw RingMismatch("monomial arity does not match ring");
  Coeff v = c;
  ring->field().normalize(v);
  if (v == 0) return Poly(ring);
  return Poly(ring, {Term{std::move(m), std::move(v)}});
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  const auto& k = ring->field();
  for (auto& t : terms) {
    if (t.mono.arity() != ring->arity()) throw RingMismatch("monomial arity does not match ring");
    k.normalize(t.coef);
  }
  std::sort(terms.begin(), terms.end(), TermGreater{&ring->order()});
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return Poly(ring, std::move(out));
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }

std::int64_t Poly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Exponent Poly::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Poly Poly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = ring_->field().neg(t.coef);
  return Poly(ring_, std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(ring_->field(), ring_->order(), terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(ring_->field(), ring_->order(), terms_, other.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
  const auto& k = a.ring_->field();
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back(Term{s.mono * t.mono, k.mul(s.coef, t.coef)});
  std::sort(prods.begin(), prods.end(), TermGreater{&a.ring_->order()});
  std::vector<Term> out;
  out.reserve(prods.size());
  for (auto& t : prods) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return Poly(a.ring_, std::move(out));
}

Poly Poly::scaled(const Coeff& c) const {
  Coeff v = c;
  ring_->field().normalize(v);
  if (v == 0) return Poly(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = ring_->field().mul(t.coef, v);
  return Poly(ring_, std::move(out));
}

Poly Poly::mul_term(const Monomial& m, const Coeff& c) const {
  if (c == 0) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, ring_->field().mul(t.coef, c)});
  return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero() || lead_coeff() == 1) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::map_to(const Ring& target) const {
  if (ring_.get() == target.get()) return *this;
  if (!(ring_->field() == target->field())) throw RingMismatch("coefficient fields differ");
  std::vector<std::size_t> pos(ring_->arity(), 0);
  std::vector<bool> present(ring_->arity(), false);
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    if (auto j = target->index_of(ring_->vars()[i])) {
      pos[i] = *j;
      present[i] = true;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < ring_->arity(); ++i)
      if (!present[i] && t.mono[i] != 0)
        throw RingMismatch("variable '" + ring_->vars()[i] + "' is not in the target ring");
    out.push_back(Term{t.mono.remap(target->arity(), pos), t.coef});
  }
  if (ring_->order() == target->order() && ring_->arity() == target->arity() && ring_->vars() == target->vars())
    return Poly(target, std::move(out));
  std::sort(out.begin(), out.end(), TermGreater{&target->order()});
  return Poly(target, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_.get() != b.ring_.get() && !a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->vars();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coeff c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring, bool allow_reserved)
      : src_(src), ring_(ring), allow_reserved_(allow_reserved) {}

  Poly run() {
    skip();
    if (pos_ == src_.size()) fail("empty polynomial");
    Poly p = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError("cannot parse polynomial '" + std::string(src_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(ring_->field().inv(d.lead_coeff()));
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      auto digits = src_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpz_class z(std::string(src_.substr(start, pos_ - start)));
      return Poly::constant(ring_, ring_->field().from_integer(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      auto name = src_.substr(start, pos_ - start);
      if (is_reserved_name(name) && !allow_reserved_)
        throw SchemaError("variable name '" + std::string(name) + "' uses the reserved prefix");
      auto idx = ring_->index_of(name);
      if (!idx) throw RingMismatch("unknown variable '" + std::string(name) + "'");
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const Ring& ring_;
  bool allow_reserved_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const Ring& ring, bool allow_reserved) {
  return Parser(src, ring, allow_reserved).run();
}

// ---------------------------------------------------------------- content, Kronecker

std::vector<Coeff> content_ideal(const Poly& f) {
  std::vector<Coeff> out;
  for (const auto& t : f.terms()) out.push_back(t.coef);
  return out;
}

std::vector<Poly> content_ideal(const Poly& f, const std::vector<std::string>& wrt) {
  const auto& ring = f.ring();
  std::vector<std::size_t> idx;
  for (const auto& name : wrt) {
    auto i = ring->index_of(name);
    if (!i) throw RingMismatch("unknown variable '" + name + "'");
    idx.push_back(*i);
  }
  std::map<std::vector<Exponent>, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> key;
    auto rest = t.mono.exponents();
    for (auto i : idx) {
      key.push_back(rest[i]);
      rest[i] = 0;
    }
    buckets[key].push_back(Term{Monomial(rest), t.coef});
  }
  std::vector<Poly> out;
  for (auto& [key, terms] : buckets) out.push_back(Poly::from_terms(ring, std::move(terms)));
  return out;
}

Poly kronecker_poly_in(const Ring& target, std::span<const Poly> gens, std::size_t var) {
  Poly f(target);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Poly g = gens[i].map_to(target);
    if (g.is_zero()) continue;
    f += g.mul_term(Monomial::variable(target->arity(), var, static_cast<Exponent>(i)), 1);
  }
  return f;
}

Poly kronecker_poly(const Ring& base, std::span<const Poly> gens, std::string_view fresh_var) {
  if (base->index_of(fresh_var)) throw RingMismatch("fresh variable '" + std::string(fresh_var) + "' collides with the ring");
  for (const auto& g : gens) require_same_ring(base, g.ring());
  Ring ext = extend_ring(base, {std::string(fresh_var)});
  return kronecker_poly_in(ext, gens, base->arity());
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) return std::nullopt;
  const auto& k = f.ring()->field();
  Poly rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.lead();
    if (!g.lead_monomial().divides(lt.mono)) return std::nullopt;
    Monomial m = lt.mono / g.lead_monomial();
    Coeff c = k.div(lt.coef, g.lead_coeff());
    rem -= g.mul_term(m, c);
    quot.push_back(Term{std::move(m), std::move(c)});
  }
  return Poly::from_terms(f.ring(), std::move(quot));
}

}  // namespace ffr
