#include "ffr/depth.hpp"

#include <algorithm>
#include <numeric>

#include "ffr/errors.hpp"

namespace ffr {

namespace {

std::vector<Poly> reduced_nonzero(const FPAlgebra& A, const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly r = A.reduce(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<FreeModuleElem> scaled_units(const Ring& R, std::size_t rank, const std::vector<Poly>& gens) {
  std::vector<FreeModuleElem> out;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < rank; ++i) out.push_back(FreeModuleElem::unit(R, rank, i).scaled(g));
  return out;
}

// Two-sided containment of submodules given by generators.
bool same_submodule(const Ring& R, std::size_t rank, const std::vector<FreeModuleElem>& a,
                    const std::vector<FreeModuleElem>& b, std::vector<std::string>& bad) {
  ModuleGB ga(R, rank, a), gb(R, rank, b);
  bool ok = true;
  auto describe = [](const FreeModuleElem& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) s += (i ? ", " : "") + to_string(v.coords[i]);
    return s + ")";
  };
  for (const auto& v : a)
    if (!gb.contains(v)) {
      ok = false;
      bad.push_back(describe(v));
    }
  for (const auto& v : b)
    if (!ga.contains(v)) {
      ok = false;
      bad.push_back(describe(v));
    }
  return ok;
}

}  // namespace

KroneckerSequence kronecker_sequence(const AIdeal& a, std::size_t k) {
  const Ring& base = a.algebra.ring();
  KroneckerSequence seq;
  seq.fresh = fresh_names(*base, k);
  seq.ring = extend_ring(base, seq.fresh);
  for (std::size_t i = 0; i < k; ++i) seq.polys.push_back(kronecker_poly_in(seq.ring, a.gens, base->arity() + i));
  return seq;
}

DepthCertificate is_E_regular_sequence(const std::vector<Poly>& seq, const AModule& E) {
  DepthCertificate cert;
  cert.requested = seq.size();
  cert.sequence = seq;
  if (seq.empty() || E.rank == 0) return cert;
  const Ring& R = seq.front().ring();
  for (const auto& f : seq) require_same_ring(R, f.ring());
  const AModule ext = E.over(R);
  std::vector<FreeModuleElem> N = ext.relation_module();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Poly& f = seq[i];
    ModuleGB stage(R, ext.rank, N);
    for (const auto& v : module_quotient(R, ext.rank, N, f)) {
      FreeModuleElem w = stage.reduce(v);
      if (w.is_zero()) continue;
      if (!stage.contains(w.scaled(f))) throw VerificationFailure("depth witness is not annihilated by the sequence element");
      cert.holds = false;
      cert.failed_index = i + 1;
      cert.witness = std::move(w);
      return cert;
    }
    auto more = scaled_units(R, ext.rank, {f});
    N.insert(N.end(), more.begin(), more.end());
  }
  return cert;
}

std::vector<Poly> radical_generators(const AIdeal& a) {
  const FPAlgebra& A = a.algebra;
  std::vector<Poly> gens = reduced_nonzero(A, a.gens);
  IdealGens lifted = a.lifted();
  if (is_unit_ideal(lifted)) return {Poly::constant(A.ring(), 1)};
  std::vector<Poly> from_gb = reduced_nonzero(A, lifted.groebner().basis());
  if (from_gb.size() < gens.size()) gens = std::move(from_gb);
  if (gens.size() <= 1) return gens;

  // Try to drop the heaviest generators first.
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return gens[x].total_degree() > gens[y].total_degree(); });
  std::vector<bool> keep(gens.size(), true);
  for (std::size_t idx : order) {
    std::vector<Poly> others = A.relations().gens();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != idx && keep[j]) others.push_back(gens[j]);
    if (radical_membership(gens[idx], IdealGens(A.ring(), others))) keep[idx] = false;
  }
  std::vector<Poly> out;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (keep[j]) out.push_back(gens[j]);
  return out;
}

DepthCertificate depth_at_least(const AIdeal& a, const AModule& E, std::size_t k) {
  DepthCertificate cert;
  cert.requested = k;
  if (k == 0) return cert;
  if (ideal_times_module_is_module(a, E)) {
    cert.infinite = true;
    return cert;
  }
  std::vector<Poly> gens = radical_generators(AIdeal{a.algebra, a.gens});
  // Gr ≥ m + 1 with m generators would force 𝔞E = E, so runs never need to be longer.
  const std::size_t run = std::min(k, gens.size() + 1);
  auto seq = kronecker_sequence(AIdeal{a.algebra, gens}, run);
  cert = is_E_regular_sequence(seq.polys, E);
  cert.requested = k;
  if (cert.holds && run < k) throw VerificationFailure("regular Kronecker sequence longer than the generator count");
  return cert;
}

DepthValue depth_value(const AIdeal& a, const AModule& E) {
  DepthValue out;
  if (ideal_times_module_is_module(a, E)) {
    out.infinite = true;
    out.certificate.infinite = true;
    return out;
  }
  std::vector<Poly> gens = radical_generators(a);
  auto seq = kronecker_sequence(AIdeal{a.algebra, gens}, gens.size() + 1);
  out.certificate = is_E_regular_sequence(seq.polys, E);
  if (out.certificate.holds) throw VerificationFailure("finite depth expected but the full Kronecker sequence is regular");
  out.value = out.certificate.failed_index - 1;
  return out;
}

Regularization triangular_regularization(const AIdeal& a, const AModule& E, std::size_t l) {
  const std::size_t k = a.gens.size();
  if (l > k) throw PreconditionError("regularization length exceeds the number of generators");
  const Ring& base = a.algebra.ring();
  auto names = fresh_names(*base, l);
  Ring R = extend_ring(base, names);
  Regularization out;
  out.transform = Matrix::identity(R, k);
  for (std::size_t i = 0; i < l; ++i) {
    Poly X = Poly::variable(R, base->arity() + i);
    for (std::size_t j = i + 1; j < k; ++j) out.transform.at(i, j) = X.pow(static_cast<unsigned>(j - i));
  }
  Matrix col(R, k, 1);
  for (std::size_t i = 0; i < k; ++i) col.at(i, 0) = a.gens[i].map_to(R);
  Matrix b = out.transform * col;
  for (std::size_t i = 0; i < k; ++i) out.b.push_back(b.at(i, 0));
  out.check = is_E_regular_sequence(std::vector<Poly>(out.b.begin(), out.b.begin() + static_cast<long>(l)), E);
  return out;
}

bool is_completely_secant(const std::vector<Poly>& seq, const AModule& E) {
  return depth_at_least(AIdeal{E.algebra, seq}, E, seq.size()).holds;
}

bool is_singular_sequence(const std::vector<Poly>& seq, const FPAlgebra& A) {
  IdealGens I = A.relations();
  for (const auto& x : seq) {
    require_same_ring(A.ring(), x.ring());
    I = ideal_sum(saturation(I, x), IdealGens(A.ring(), {x}));
  }
  return is_unit_ideal(I);
}

WiebeReport wiebe_check(const std::vector<Poly>& c, const std::vector<Poly>& a, const Matrix& U, const AModule& E) {
  const std::size_t n = a.size();
  if (c.size() != n || U.rows() != n || U.cols() != n) throw PreconditionError("wiebe: sequences and matrix of different sizes");
  const Ring& R = E.ring();
  Matrix acol(R, n, 1);
  for (std::size_t i = 0; i < n; ++i) acol.at(i, 0) = a[i];
  Matrix prod = U * acol;
  for (std::size_t i = 0; i < n; ++i)
    if (!E.algebra.equal(prod.at(i, 0), c[i])) throw PreconditionError("wiebe: c is not U times a");

  WiebeReport rep;
  rep.det = determinant(U);
  rep.secant = is_completely_secant(c, E);
  const AModule cE = E.modulo(c);
  auto colon_det = module_quotient(R, E.rank, cE.relation_module(), *rep.det);
  rep.colon_by_det = same_submodule(R, E.rank, colon_det, E.modulo(a).relation_module(), rep.counterexamples);
  auto colon_ideal = module_colon_ideal(cE, a);
  std::vector<Poly> cd = c;
  cd.push_back(*rep.det);
  rep.colon_by_ideal = same_submodule(R, E.rank, colon_ideal, E.modulo(cd).relation_module(), rep.counterexamples);
  return rep;
}

DepthDimReport depth_dim_identity(const AIdeal& a) {
  const FPAlgebra& A = a.algebra;
  if (!A.relations().empty()) throw PreconditionError("depth/dimension identity needs a polynomial ring without relations");
  DepthDimReport rep;
  rep.n = A.ring()->arity();
  rep.krull_dim = krull_dimension(IdealGens(A.ring(), a.gens));
  const AModule E = AModule::free(A, 1);
  if (rep.krull_dim < 0) {
    rep.unit_ideal = true;
    rep.at_least = depth_at_least(a, E, rep.n + 1);
    rep.holds = rep.at_least.holds && rep.at_least.infinite;
    return rep;
  }
  const std::size_t q = rep.n - static_cast<std::size_t>(rep.krull_dim);
  rep.at_least = depth_at_least(a, E, q);
  rep.next = depth_at_least(a, E, q + 1);
  rep.holds = rep.at_least.holds && !rep.next->holds;
  return rep;
}

}  // namespace ffr
