#include "ffr/algebra.hpp"

#include "ffr/errors.hpp"

namespace ffr {

namespace {

std::vector<Poly> mapped(const std::vector<Poly>& ps, const Ring& target) {
  std::vector<Poly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.map_to(target));
  return out;
}

bool all_in(const ModuleGB& gb, const std::vector<FreeModuleElem>& vs) {
  for (const auto& v : vs)
    if (!gb.contains(v)) return false;
  return true;
}

}  // namespace

FPAlgebra::FPAlgebra(Ring ring, std::vector<Poly> relations)
    : ring_(ring), relations_(std::move(ring), std::move(relations)) {}

Poly FPAlgebra::reduce(const Poly& f) const {
  require_same_ring(ring_, f.ring());
  if (relations_.empty()) return f;
  return relations_.groebner().reduce(f);
}

FPAlgebra FPAlgebra::extended(const std::vector<std::string>& vars) const {
  return over(extend_ring(ring_, vars));
}

FPAlgebra FPAlgebra::over(const Ring& larger) const {
  if (larger->same_as(*ring_)) return *this;
  return FPAlgebra(larger, mapped(relations_.gens(), larger));
}

IdealGens FPAlgebra::lift_ideal(const std::vector<Poly>& gens) const {
  std::vector<Poly> all = relations_.gens();
  for (const auto& g : gens) {
    require_same_ring(ring_, g.ring());
    all.push_back(g);
  }
  return IdealGens(ring_, std::move(all));
}

bool operator==(const FPAlgebra& a, const FPAlgebra& b) {
  return a.ring_->same_as(*b.ring_) && ideal_equal(a.relations_, b.relations_);
}

AModule AModule::free(const FPAlgebra& algebra, std::size_t rank) { return AModule{algebra, rank, {}}; }

AModule AModule::cokernel(const FPAlgebra& algebra, const std::vector<std::vector<Poly>>& rows) {
  AModule E{algebra, rows.size(), {}};
  if (rows.empty()) return E;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw SchemaError("presentation matrix rows of different lengths");
  for (std::size_t j = 0; j < cols; ++j) {
    FreeModuleElem c{algebra.ring(), {}};
    for (const auto& r : rows) c.coords.push_back(r[j]);
    E.columns.push_back(std::move(c));
  }
  return E;
}

AModule AModule::quotient(const FPAlgebra& algebra, const std::vector<Poly>& gens) {
  AModule E{algebra, 1, {}};
  for (const auto& g : gens) E.columns.push_back(FreeModuleElem{algebra.ring(), {g}});
  return E;
}

std::vector<FreeModuleElem> AModule::relation_module() const {
  std::vector<FreeModuleElem> out = columns;
  for (const auto& j : algebra.relations().gens())
    for (std::size_t i = 0; i < rank; ++i) out.push_back(FreeModuleElem::unit(ring(), rank, i).scaled(j));
  return out;
}

AModule AModule::over(const Ring& larger) const {
  AModule E{algebra.over(larger), rank, {}};
  for (const auto& c : columns) E.columns.push_back(c.map_to(larger));
  return E;
}

AModule AModule::modulo(const std::vector<Poly>& gens) const {
  AModule E = *this;
  for (const auto& g : gens) {
    require_same_ring(ring(), g.ring());
    if (g.is_zero()) continue;
    for (std::size_t i = 0; i < rank; ++i) E.columns.push_back(FreeModuleElem::unit(ring(), rank, i).scaled(g));
  }
  return E;
}

bool is_trivial(const FPAlgebra& A) { return A.is_trivial(); }

bool is_regular_element(const FPAlgebra& A, const Poly& f) {
  return ideal_equal(ideal_colon(A.relations(), f), A.relations());
}

bool is_faithful_ideal(const FPAlgebra& A, const AIdeal& a) {
  return ideal_equal(ideal_colon(A.relations(), IdealGens(A.ring(), a.gens)), A.relations());
}

bool is_regular_on(const AModule& E, const Poly& f) {
  if (E.rank == 0) return true;
  auto N = E.relation_module();
  ModuleGB gb(E.ring(), E.rank, N);
  return all_in(gb, module_quotient(E.ring(), E.rank, N, f));
}

std::vector<FreeModuleElem> module_colon_ideal(const AModule& E, const std::vector<Poly>& gens) {
  auto N = E.relation_module();
  std::vector<FreeModuleElem> acc;
  bool first = true;
  for (const auto& g : gens) {
    auto q = module_quotient(E.ring(), E.rank, N, g);
    acc = first ? std::move(q) : module_intersection(E.ring(), E.rank, acc, q);
    first = false;
  }
  if (first)
    for (std::size_t i = 0; i < E.rank; ++i) acc.push_back(FreeModuleElem::unit(E.ring(), E.rank, i));
  return acc;
}

bool is_faithful_on(const AModule& E, const std::vector<Poly>& gens) {
  if (E.rank == 0) return true;
  ModuleGB gb(E.ring(), E.rank, E.relation_module());
  return all_in(gb, module_colon_ideal(E, gens));
}

std::vector<FreeModuleElem> module_colon_element(const AModule& E, const Poly& f) {
  if (E.rank == 0) return {};
  auto N = E.relation_module();
  ModuleGB gb(E.ring(), E.rank, N);
  std::vector<FreeModuleElem> out;
  for (const auto& v : module_quotient(E.ring(), E.rank, N, f)) {
    auto r = gb.reduce(v);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

bool in_ideal_times_module(const FreeModuleElem& v, const std::vector<Poly>& gens, const AModule& E) {
  auto gensN = E.relation_module();
  for (const auto& g : gens)
    for (std::size_t i = 0; i < E.rank; ++i) gensN.push_back(FreeModuleElem::unit(E.ring(), E.rank, i).scaled(g));
  return ModuleGB(E.ring(), E.rank, gensN).contains(v);
}

bool ideal_times_module_is_module(const AIdeal& a, const AModule& E) {
  if (E.rank == 0) return true;
  return ModuleGB(E.ring(), E.rank, E.modulo(a.gens).relation_module()).is_everything();
}

IdealGens annihilator(const AModule& E) {
  const auto& R = E.ring();
  if (E.rank == 0) return IdealGens(R, {Poly::constant(R, 1)});
  auto N = E.relation_module();
  std::optional<IdealGens> acc;
  for (std::size_t i = 0; i < E.rank; ++i) {
    // f e_i ∈ N: first coordinates of the syzygies of (e_i, N).
    std::vector<FreeModuleElem> gens{FreeModuleElem::unit(R, E.rank, i)};
    gens.insert(gens.end(), N.begin(), N.end());
    std::vector<Poly> firsts;
    for (const auto& s : syzygy_module(gens)) firsts.push_back(s.coords[0]);
    IdealGens part(R, std::move(firsts));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return *acc;
}

}  // namespace ffr
