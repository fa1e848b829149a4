#include "ffr/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "ffr/errors.hpp"

namespace ffr {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw SchemaError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ -= b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity());
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity());
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::remap(std::size_t new_arity, const std::vector<std::size_t>& positions) const {
  Monomial r(new_arity);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[positions[i]] += exps_[i];
  r.degree_ = degree_;
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& text) {
  if (text == "grevlex") return OrderKind::grevlex;
  if (text == "lex") return OrderKind::lex;
  if (text == "grlex") return OrderKind::grlex;
  throw SchemaError("unknown monomial order '" + text + "'");
}

MonomialOrder MonomialOrder::uniform(OrderKind kind, std::size_t arity) {
  std::vector<std::size_t> vars(arity);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return blocks({Block{kind, std::move(vars)}}, arity);
}

MonomialOrder MonomialOrder::blocks(std::vector<Block> blocks, std::size_t arity) {
  std::vector<int> seen(arity, 0);
  for (const auto& b : blocks)
    for (auto v : b.vars) {
      if (v >= arity || seen[v]++) throw PreconditionError("monomial order blocks must partition the variables");
    }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(arity))
    throw PreconditionError("monomial order blocks must cover every variable");
  MonomialOrder o;
  o.arity_ = arity;
  o.blocks_ = std::move(blocks);
  o.identity_layout_ = o.blocks_.size() <= 1;
  if (o.blocks_.size() == 1)
    for (std::size_t i = 0; i < o.blocks_[0].vars.size(); ++i)
      if (o.blocks_[0].vars[i] != i) o.identity_layout_ = false;
  return o;
}

namespace {

int compare_block(const MonomialOrder::Block& b, const Monomial& x, const Monomial& y) {
  const auto& vs = b.vars;
  if (b.kind != OrderKind::lex) {
    std::int64_t dx = 0, dy = 0;
    for (auto v : vs) {
      dx += x[v];
      dy += y[v];
    }
    if (dx != dy) return dx < dy ? -1 : 1;
  }
  if (b.kind == OrderKind::grevlex) {
    for (std::size_t k = vs.size(); k-- > 0;) {
      auto v = vs[k];
      if (x[v] != y[v]) return x[v] > y[v] ? -1 : 1;
    }
    return 0;
  }
  for (auto v : vs)
    if (x[v] != y[v]) return x[v] < y[v] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (identity_layout_ && blocks_.size() == 1) {
    const auto kind = blocks_[0].kind;
    const auto n = a.arity();
    if (kind != OrderKind::lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (kind == OrderKind::grevlex) {
      for (std::size_t k = n; k-- > 0;)
        if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
  }
  for (const auto& blk : blocks_)
    if (int c = compare_block(blk, a, b); c != 0) return c;
  return 0;
}

}  // namespace ffr
