#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ffr {

using Exponent = std::int32_t;

// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Support (set of variables with positive exponent) as a bit pattern, capped at 64 vars.
  std::uint64_t support_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  // Pads (or reindexes) into a larger arity; positions[i] is the new slot of variable i.
  Monomial remap(std::size_t new_arity, const std::vector<std::size_t>& positions) const;

 private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { grevlex, lex, grlex };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& text);

// A product (block) order. Blocks are compared in sequence; within a block
// the restricted exponent vectors are compared by the block's kind.
class MonomialOrder {
 public:
  struct Block {
    OrderKind kind;
    std::vector<std::size_t> vars;
    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;
  static MonomialOrder uniform(OrderKind kind, std::size_t arity);
  static MonomialOrder blocks(std::vector<Block> blocks, std::size_t arity);

  // Negative, zero, positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::size_t arity() const noexcept { return arity_; }
  bool is_uniform() const noexcept { return blocks_.size() <= 1 && identity_layout_; }
  OrderKind leading_kind() const { return blocks_.empty() ? OrderKind::grevlex : blocks_.front().kind; }
  const std::vector<Block>& block_list() const noexcept { return blocks_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.arity_ == b.arity_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::size_t arity_ = 0;
  bool identity_layout_ = true;
};

}  // namespace ffr
