#include "ffr/exterior.hpp"

#include "ffr/errors.hpp"

namespace ffr {

MultiVector::MultiVector(Ring ring, int n, int grade) : ring_(std::move(ring)), n_(n), grade_(grade) {
  if (n < 0 || grade < 0 || grade > n) throw PreconditionError("multivector grade out of range");
}

MultiVector MultiVector::basis(const Ring& ring, int n, const Subset& I) {
  MultiVector m(ring, n, static_cast<int>(I.size()));
  for (std::size_t i = 0; i < I.size(); ++i)
    if (I[i] < 0 || I[i] >= n || (i > 0 && I[i - 1] >= I[i])) throw PreconditionError("basis subset is not increasing in range");
  m.coords_.emplace(I, Poly::constant(ring, 1));
  return m;
}

MultiVector MultiVector::scalar(const Ring& ring, int n, const Poly& a) {
  MultiVector m(ring, n, 0);
  m.add_to({}, a);
  return m;
}

MultiVector MultiVector::vector(const std::vector<Poly>& coords) {
  if (coords.empty()) throw PreconditionError("vector needs at least one coordinate to fix its ring");
  MultiVector m(coords.front().ring(), static_cast<int>(coords.size()), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) m.add_to({static_cast<int>(i)}, coords[i]);
  return m;
}

Poly MultiVector::coord(const Subset& I) const {
  auto it = coords_.find(I);
  return it == coords_.end() ? Poly(ring_) : it->second;
}

void MultiVector::add_to(const Subset& I, const Poly& c) {
  if (c.is_zero()) return;
  require_same_ring(ring_, c.ring());
  auto [it, fresh] = coords_.emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

MultiVector MultiVector::scaled(const Poly& c) const {
  MultiVector m(ring_, n_, grade_);
  for (const auto& [I, a] : coords_) m.add_to(I, a * c);
  return m;
}

void MultiVector::check_compatible(const MultiVector& o) const {
  if (n_ != o.n_ || grade_ != o.grade_) throw RingMismatch("multivectors of different rank or grade");
  require_same_ring(ring_, o.ring_);
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  check_compatible(o);
  for (const auto& [I, a] : o.coords_) add_to(I, a);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  check_compatible(o);
  for (const auto& [I, a] : o.coords_) add_to(I, -a);
  return *this;
}

bool operator==(const MultiVector& a, const MultiVector& b) {
  return a.n_ == b.n_ && a.grade_ == b.grade_ && a.coords_ == b.coords_;
}

std::vector<Poly> MultiVector::column() const {
  std::vector<Poly> out;
  for (const auto& I : subsets_colex(n_, grade_)) out.push_back(coord(I));
  return out;
}

MultiVector MultiVector::reduced(const FPAlgebra& A) const {
  MultiVector m(ring_, n_, grade_);
  for (const auto& [I, a] : coords_) m.add_to(I, A.reduce(a));
  return m;
}

MultiVector wedge(const MultiVector& x, const MultiVector& y) {
  if (x.ambient() != y.ambient()) throw RingMismatch("wedge of multivectors of different rank");
  require_same_ring(x.ring(), y.ring());
  if (x.grade() + y.grade() > x.ambient()) return MultiVector(x.ring(), x.ambient(), x.ambient());
  MultiVector out(x.ring(), x.ambient(), x.grade() + y.grade());
  Subset K;
  for (const auto& [I, a] : x.coords())
    for (const auto& [J, b] : y.coords()) {
      if (!disjoint_union(I, J, K)) continue;
      Poly c = a * b;
      out.add_to(K, shuffle_sign(I, J) > 0 ? c : -c);
    }
  return out;
}

MultiVector wedge_all(const std::vector<MultiVector>& vs, const Ring& ring, int n) {
  MultiVector acc = MultiVector::scalar(ring, n, Poly::constant(ring, 1));
  for (const auto& v : vs) acc = wedge(acc, v);
  return acc;
}

MultiVector decomposable(const Matrix& U) {
  const int n = static_cast<int>(U.rows());
  const int k = static_cast<int>(U.cols());
  if (k > n) throw PreconditionError("decomposable: more columns than rows");
  Subset cols;
  for (int j = 0; j < k; ++j) cols.push_back(j);
  MultiVector out(U.ring(), n, k);
  for (const auto& I : subsets_colex(n, k)) out.add_to(I, minor(U, I, cols));
  return out;
}

Poly pairing(const MultiVector& u, const MultiVector& v) {
  if (u.ambient() != v.ambient() || u.grade() != v.grade()) throw RingMismatch("pairing of multivectors of different rank or grade");
  Poly acc(u.ring());
  for (const auto& [I, a] : u.coords()) {
    auto it = v.coords().find(I);
    if (it != v.coords().end()) acc += a * it->second;
  }
  return acc;
}

Poly top_coefficient(const MultiVector& x) {
  if (x.grade() != x.ambient()) throw PreconditionError("top coefficient of a multivector below top grade");
  Subset all;
  for (int i = 0; i < x.ambient(); ++i) all.push_back(i);
  return x.coord(all);
}

MultiVector hodge_right(const MultiVector& x) {
  const int n = x.ambient();
  MultiVector out(x.ring(), n, n - x.grade());
  // [e_I ∧ e_J] is ε_{I,J} when J is the complement of I and 0 otherwise.
  for (const auto& [I, a] : x.coords()) {
    Subset J = complement(I, n);
    out.add_to(J, shuffle_sign(I, J) > 0 ? a : -a);
  }
  return out;
}

MultiVector interior_right(const MultiVector& x, const MultiVector& u) {
  if (u.grade() != 1 || u.ambient() != x.ambient()) throw PreconditionError("interior product needs a vector of the same rank");
  if (x.grade() == 0) return MultiVector(x.ring(), x.ambient(), 0);
  MultiVector out(x.ring(), x.ambient(), x.grade() - 1);
  for (const auto& [I, a] : x.coords())
    for (std::size_t pos = 0; pos < I.size(); ++pos) {
      Poly ui = u.coord({I[pos]});
      if (ui.is_zero()) continue;
      Poly c = a * ui;
      out.add_to(without(I, I[pos]), pos % 2 ? -c : c);
    }
  return out;
}

SylvesterPlucker sylvester_plucker(const std::vector<MultiVector>& x, const std::vector<MultiVector>& z) {
  if (x.empty()) throw PreconditionError("Sylvester-Plücker needs n vectors");
  const Ring& R = x.front().ring();
  const int n = x.front().ambient();
  const int p = static_cast<int>(z.size());
  if (static_cast<int>(x.size()) != n || p > n) throw PreconditionError("Sylvester-Plücker needs n vectors x and at most n vectors z");
  for (const auto& v : x)
    if (v.grade() != 1 || v.ambient() != n) throw PreconditionError("Sylvester-Plücker inputs must be vectors of A^n");
  for (const auto& v : z)
    if (v.grade() != 1 || v.ambient() != n) throw PreconditionError("Sylvester-Plücker inputs must be vectors of A^n");

  SylvesterPlucker out{wedge_all(z, R, n).scaled(top_coefficient(wedge_all(x, R, n))), MultiVector(R, n, p), false};
  for (const auto& K : subsets_colex(n, p)) {
    std::vector<MultiVector> replaced = x;
    std::vector<MultiVector> chosen;
    for (int i = 0; i < p; ++i) {
      replaced[static_cast<std::size_t>(K[static_cast<std::size_t>(i)])] = z[static_cast<std::size_t>(i)];
      chosen.push_back(x[static_cast<std::size_t>(K[static_cast<std::size_t>(i)])]);
    }
    Poly c = top_coefficient(wedge_all(replaced, R, n));
    if (!c.is_zero()) out.rhs += wedge_all(chosen, R, n).scaled(c);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

bool are_proportional(const MultiVector& u, const MultiVector& v, const FPAlgebra& A) {
  if (u.ambient() != v.ambient() || u.grade() != v.grade()) throw RingMismatch("proportionality of multivectors of different rank or grade");
  std::vector<Subset> support;
  for (const auto& [I, a] : u.coords()) support.push_back(I);
  for (const auto& [I, a] : v.coords())
    if (!u.coords().count(I)) support.push_back(I);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const Subset& I = support[i];
      const Subset& J = support[j];
      if (!A.is_zero(u.coord(I) * v.coord(J) - u.coord(J) * v.coord(I))) return false;
    }
  return true;
}

}  // namespace ffr
