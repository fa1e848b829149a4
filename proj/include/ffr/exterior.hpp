#pragma once

#include <map>
#include <vector>

#include "ffr/algebra.hpp"
#include "ffr/matrix.hpp"

namespace ffr {

// Element of Λ^grade(A^n) in the basis e_I, I a grade-subset of {0..n-1}.
// Zero coordinates are never stored.
class MultiVector {
 public:
  MultiVector(Ring ring, int n, int grade);

  static MultiVector basis(const Ring& ring, int n, const Subset& I);
  static MultiVector scalar(const Ring& ring, int n, const Poly& a);
  static MultiVector vector(const std::vector<Poly>& coords);

  const Ring& ring() const noexcept { return ring_; }
  int ambient() const noexcept { return n_; }
  int grade() const noexcept { return grade_; }
  const std::map<Subset, Poly>& coords() const noexcept { return coords_; }
  Poly coord(const Subset& I) const;
  bool is_zero() const { return coords_.empty(); }

  void add_to(const Subset& I, const Poly& c);
  MultiVector scaled(const Poly& c) const;
  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend bool operator==(const MultiVector& a, const MultiVector& b);

  // Coordinates as a column in colex order of the grade-subsets.
  std::vector<Poly> column() const;
  MultiVector reduced(const FPAlgebra& A) const;

 private:
  void check_compatible(const MultiVector& o) const;
  Ring ring_;
  int n_;
  int grade_;
  std::map<Subset, Poly> coords_;
};

MultiVector wedge(const MultiVector& x, const MultiVector& y);
MultiVector wedge_all(const std::vector<MultiVector>& vs, const Ring& ring, int n);
// u₁ ∧ … ∧ u_k for the columns of an n×k matrix.
MultiVector decomposable(const Matrix& U);
// Σ_I u_I v_I.
Poly pairing(const MultiVector& u, const MultiVector& v);
// [x] for x of top grade: the coordinate on e_{0..n-1}.
Poly top_coefficient(const MultiVector& x);
// x⋆ = Σ_J [x ∧ e_J] e_J.
MultiVector hodge_right(const MultiVector& x);
// x ⌞ u for u of grade 1.
MultiVector interior_right(const MultiVector& x, const MultiVector& u);

struct SylvesterPlucker {
  MultiVector lhs;  // [x₁ ∧ … ∧ xₙ] z₁ ∧ … ∧ z_p
  MultiVector rhs;  // Σ_K [x ←_K z] ⋀_{k∈K} x_k
  bool equal;
};
SylvesterPlucker sylvester_plucker(const std::vector<MultiVector>& x, const std::vector<MultiVector>& z);

// All u_I v_J - u_J v_I vanish in A.
bool are_proportional(const MultiVector& u, const MultiVector& v, const FPAlgebra& A);

}  // namespace ffr
