#pragma once

// Buchberger engine over submodules of a free module R^rank.
// Terms carry a component index; the module order is position-over-term with
// lower component indices ranking higher.

#include <cstdint>
#include <vector>

#include "ffr/ring.hpp"

namespace ffr::detail {

struct VTerm {
  Monomial m;
  std::uint32_t comp;
  Coeff c;
};

using Vec = std::vector<VTerm>;

// Sign of a - b in the position-over-term order.
inline int compare_terms(const MonomialOrder& ord, const VTerm& a, const VTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ord.compare(a.m, b.m);
}

Vec sorted_vec(const PolyRing& ring, Vec terms);
Vec make_monic(const PolyRing& ring, Vec f);

// Leading-term index over a fixed list of monic reducers.
class Reducers {
 public:
  Reducers() = default;
  explicit Reducers(const std::vector<Vec>& gb);
  explicit Reducers(std::vector<const Vec*> gb);
  // Index of a reducer whose leading term divides t, or -1.
  long find(const VTerm& t) const;
  const Vec& operator[](std::size_t i) const { return *polys_[i]; }
  std::size_t size() const noexcept { return polys_.size(); }

 private:
  std::vector<const Vec*> polys_;
  std::vector<std::uint64_t> masks_;
};

// Full normal form.
Vec reduce_full(const PolyRing& ring, Vec f, const Reducers& red);
// Reduces only while the leading term sits in a component below `comp_limit`;
// stops as soon as the leading term reaches component >= comp_limit (or f = 0).
Vec reduce_top(const PolyRing& ring, Vec f, const Reducers& red, std::uint32_t comp_limit);

// Reduced Gröbner basis, monic, sorted by decreasing leading term.
// The product criterion is only sound for ideals, hence `ideal_mode`.
std::vector<Vec> reduced_gb(const PolyRing& ring, std::vector<Vec> gens, bool ideal_mode);

}  // namespace ffr::detail
