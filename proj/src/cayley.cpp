#include "ffr/cayley.hpp"

#include <string>

#include "ffr/errors.hpp"

namespace ffr {

namespace {

std::vector<Poly> nonzero_mod(const FPAlgebra& A, const std::vector<Poly>& v) {
  std::vector<Poly> out;
  for (const auto& f : v) {
    Poly r = A.reduce(f);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

// c with v = c·w in A^N, found by lifting against w and J·A^N.
std::optional<Poly> lift_multiple(const FPAlgebra& A, const std::vector<Poly>& v, const std::vector<Poly>& w) {
  const Ring& R = A.ring();
  const std::size_t N = w.size();
  if (N == 0) return Poly(R);
  std::vector<FreeModuleElem> gens{FreeModuleElem{R, w}};
  for (const auto& g : A.relations().gens())
    for (std::size_t j = 0; j < N; ++j) gens.push_back(FreeModuleElem::unit(R, N, j).scaled(g));
  auto coeffs = module_membership(FreeModuleElem{R, v}, gens);
  if (!coeffs) return std::nullopt;
  return A.reduce(coeffs->front());
}

bool matrix_vanishes(const FPAlgebra& A, const Matrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!A.is_zero(M.at(i, j))) return false;
  return true;
}

std::optional<Poly> default_gcd_candidate(const std::vector<Poly>& gens) {
  if (gens.empty()) return std::nullopt;
  if (gens.size() == 1) return gens.front();
  std::optional<Monomial> m;
  for (const auto& g : gens) {
    if (g.size() != 1) return std::nullopt;
    m = m ? gcd(*m, g.lead_monomial()) : g.lead_monomial();
  }
  return Poly::monomial(gens.front().ring(), *m);
}

// Coefficients c_s of X^s Y^{deg-s}, s = 0..deg, over the ring of A.
std::vector<Poly> binary_form_coeffs(const FPAlgebra& A, const Poly& F, std::size_t& deg, std::string_view x_name,
                                     std::string_view y_name) {
  if (F.is_zero()) throw PreconditionError("binary form must be nonzero");
  const Ring& RF = F.ring();
  const auto xi = RF->index_of(x_name), yi = RF->index_of(y_name);
  if (!xi || !yi) throw PreconditionError("binary form ring lacks the variables " + std::string(x_name) + ", " + std::string(y_name));
  const Ring& R = A.ring();
  std::vector<std::size_t> slot(RF->arity());
  for (std::size_t v = 0; v < RF->arity(); ++v) {
    if (v == *xi || v == *yi) continue;
    auto t = R->index_of(RF->vars()[v]);
    if (!t) throw RingMismatch("coefficient variable " + RF->vars()[v] + " is not in the base ring");
    slot[v] = *t;
  }
  deg = static_cast<std::size_t>(F.lead_monomial()[*xi] + F.lead_monomial()[*yi]);
  std::vector<std::vector<Term>> by_power(deg + 1);
  for (const auto& t : F.terms()) {
    const auto ex = static_cast<std::size_t>(t.mono[*xi]);
    if (ex + static_cast<std::size_t>(t.mono[*yi]) != deg) throw PreconditionError("binary form is not homogeneous in " + std::string(x_name) + ", " + std::string(y_name));
    std::vector<Exponent> e(R->arity(), 0);
    for (std::size_t v = 0; v < RF->arity(); ++v)
      if (v != *xi && v != *yi) e[slot[v]] = t.mono[v];
    by_power[ex].push_back(Term{Monomial(std::move(e)), t.coef});
  }
  std::vector<Poly> out;
  for (auto& ts : by_power) out.push_back(Poly::from_terms(R, std::move(ts)));
  return out;
}

}  // namespace

CayleyCheck is_cayley_complex(const FreeComplex& C) {
  CayleyCheck out;
  const AModule A1 = AModule::free(C.algebra(), 1);
  for (std::size_t k = 1; k <= C.length(); ++k) {
    auto cert = depth_at_least(characteristic_ideal(C, k), A1, k == 1 ? 1 : 2);
    const bool ok = cert.holds;
    out.certificates.push_back(std::move(cert));
    if (!ok) {
      out.cayley = false;
      break;
    }
  }
  return out;
}

CayleyData cayley_factorize(const FreeComplex& C) {
  if (!is_cayley_complex(C).cayley) throw PreconditionError("not a Cayley complex: a characteristic ideal lacks the required depth");
  const FPAlgebra& A = C.algebra();
  const Ring& R = A.ring();
  const std::size_t m = C.length();
  const auto& p = C.sizes();
  const auto& r = C.expected_ranks();

  CayleyData out{C, std::vector<std::vector<Poly>>(m + 1), std::vector<std::vector<Poly>>(m + 1), std::nullopt};
  out.u[m] = {Poly::constant(R, 1)};
  for (std::size_t k = m; k >= 1; --k) {
    const int n = static_cast<int>(p[k]);
    MultiVector uk(R, n, r[k + 1]);
    auto basis = subsets_colex(n, r[k + 1]);
    for (std::size_t i = 0; i < basis.size(); ++i) uk.add_to(basis[i], out.u[k][i]);
    std::vector<Poly> w = hodge_right(uk).column();
    if (!is_faithful_ideal(A, AIdeal{A, w}))
      throw VerificationFailure("Hodge dual of u_" + std::to_string(k) + " has a non-faithful content ideal");

    Matrix M = exterior_power(C.map(k), r[k]);
    std::vector<Poly> next;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j));
      auto c = lift_multiple(A, row, w);
      if (!c) throw VerificationFailure("row " + std::to_string(i) + " of the exterior power of A_" + std::to_string(k) +
                                        " is not a multiple of the dual of u_" + std::to_string(k));
      next.push_back(std::move(*c));
    }
    Matrix ucol(R, next.size(), 1), wrow(R, 1, w.size());
    for (std::size_t i = 0; i < next.size(); ++i) ucol.at(i, 0) = next[i];
    for (std::size_t j = 0; j < w.size(); ++j) wrow.at(0, j) = w[j];
    if (!matrix_vanishes(A, M - ucol * wrow))
      throw VerificationFailure("outer-product identity fails for A_" + std::to_string(k));
    out.u[k - 1] = std::move(next);
  }
  for (std::size_t k = 0; k <= m; ++k) out.factor_ideals[k] = nonzero_mod(A, out.u[k]);
  if (r[0] == 0) out.det = out.u[0].front();
  return out;
}

std::optional<StrongGcd> strong_gcd(const AIdeal& a, const std::optional<Poly>& candidate) {
  const FPAlgebra& A = a.algebra;
  std::vector<Poly> gens = nonzero_mod(A, a.gens);
  std::optional<Poly> g = candidate ? std::optional<Poly>(A.reduce(*candidate)) : default_gcd_candidate(gens);
  if (!g || g->is_zero() || !is_regular_element(A, *g)) return std::nullopt;
  StrongGcd out{*g, {}, {}};
  for (const auto& f : gens) {
    auto c = lift_multiple(A, {f}, {*g});
    if (!c) return std::nullopt;
    out.cofactors.push_back(std::move(*c));
  }
  out.depth = depth_at_least(AIdeal{A, out.cofactors}, AModule::free(A, 1), 2);
  if (!out.depth.holds) return std::nullopt;
  return out;
}

CayleyDeterminant cayley_determinant(const FreeComplex& C) {
  if (euler_characteristic(C) != 0) throw PreconditionError("Cayley determinant needs Euler characteristic 0");
  CayleyData data = cayley_factorize(C);
  const FPAlgebra& A = C.algebra();
  auto gcd = strong_gcd(characteristic_ideal(C, 1), *data.det);
  if (!gcd) throw VerificationFailure("Cayley determinant is not a strong gcd of the first characteristic ideal");
  return CayleyDeterminant{A.reduce(*data.det), std::move(*gcd)};
}

MacRaeCertificate macrae_invariant(const AModule& E, const FreeComplex& resolution) {
  const FreeComplex& C = resolution;
  if (!(E.algebra == C.algebra())) throw RingMismatch("module and resolution over different algebras");
  if (C.length() == 0 || C.sizes()[0] != E.rank) throw PreconditionError("resolution does not end in A^rank(E)");
  if (euler_characteristic(C) != 0) throw PreconditionError("MacRae invariant needs a resolution with Euler characteristic 0");
  const AModule coker{E.algebra, E.rank, C.map(1).columns()};
  ModuleGB mine(E.ring(), E.rank, E.relation_module()), theirs(E.ring(), E.rank, coker.relation_module());
  for (const auto& v : coker.relation_module())
    if (!mine.contains(v)) throw PreconditionError("cokernel of A_1 differs from the module");
  for (const auto& v : E.relation_module())
    if (!theirs.contains(v)) throw PreconditionError("cokernel of A_1 differs from the module");
  ExactnessReport exact = certify_exact(C);
  if (!exact.exact) throw PreconditionError("resolution is not exact");
  CayleyDeterminant det = cayley_determinant(C);
  return MacRaeCertificate{det.det, fitting_ideal(E, 0).gens, std::move(det.gcd), std::move(exact)};
}

HilbertBurchReport hilbert_burch(const FPAlgebra& A, const Matrix& M, const std::optional<std::vector<Poly>>& alpha) {
  const std::size_t n = M.rows();
  if (n == 0 || M.cols() + 1 != n) throw PreconditionError("Hilbert-Burch needs an n×(n-1) matrix");
  require_same_ring(A.ring(), M.ring());
  const Ring& R = A.ring();
  HilbertBurchReport out;
  Subset cols;
  for (std::size_t j = 0; j + 1 < n; ++j) cols.push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < n; ++i) {
    Subset rows;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) rows.push_back(static_cast<int>(k));
    Poly mnr = minor(M, rows, cols);
    out.delta.push_back(i % 2 ? -mnr : mnr);
  }
  Matrix drow(R, 1, n);
  for (std::size_t i = 0; i < n; ++i) drow.at(0, i) = out.delta[i];
  out.annihilates = matrix_vanishes(A, drow * M);
  out.depth = depth_at_least(AIdeal{A, out.delta}, AModule::free(A, 1), 2);
  out.exact = out.annihilates && out.depth.holds;
  if (alpha) {
    if (alpha->size() != n) throw PreconditionError("alpha must have n entries");
    if (out.exact) {
      out.scalar = lift_multiple(A, *alpha, out.delta);
      if (out.scalar) out.gcd = strong_gcd(AIdeal{A, *alpha}, *out.scalar);
    }
  }
  return out;
}

SylvesterComplex sylvester_complex(const FPAlgebra& A, const Poly& P, const Poly& Q, std::size_t d,
                                   std::string_view x_name, std::string_view y_name) {
  std::size_t p = 0, q = 0;
  auto pc = binary_form_coeffs(A, P, p, x_name, y_name);
  auto qc = binary_form_coeffs(A, Q, q, x_name, y_name);
  if (p + q == 0 || d + 1 < p + q) throw PreconditionError("Sylvester complex needs d ≥ p + q - 1");
  const Ring& R = A.ring();
  const std::size_t a = d + 1 - p - q, b = d + 1, fp = d + 1 - p, fq = d + 1 - q;

  // Row of X^e in a basis of degree-deg forms with decreasing X powers.
  auto row_of = [](std::size_t deg, std::size_t e) { return deg - e; };
  Matrix S(R, b, fp + fq);
  for (std::size_t c = 0; c < fp; ++c) {
    const std::size_t i = d - p - c;
    for (std::size_t s = 0; s <= p; ++s) S.at(row_of(d, i + s), c) = pc[s];
  }
  for (std::size_t c = 0; c < fq; ++c) {
    const std::size_t j = d - q - c;
    for (std::size_t s = 0; s <= q; ++s) S.at(row_of(d, j + s), fp + c) = qc[s];
  }
  Matrix K(R, fp + fq, a);
  for (std::size_t c = 0; c < a; ++c) {
    const std::size_t k = d - p - q - c;
    for (std::size_t s = 0; s <= q; ++s) K.at(row_of(d - p, k + s), c) = qc[s];
    for (std::size_t s = 0; s <= p; ++s) K.at(fp + row_of(d - q, k + s), c) = -pc[s];
  }
  std::vector<Poly> P_desc(pc.rbegin(), pc.rend()), Q_desc(qc.rbegin(), qc.rend());
  FreeComplex complex(A, {S, K});
  return SylvesterComplex{p, q, d, std::move(P_desc), std::move(Q_desc), std::move(K), std::move(S), std::move(complex)};
}

}  // namespace ffr
