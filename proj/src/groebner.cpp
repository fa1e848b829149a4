#include "ffr/groebner.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "ffr/errors.hpp"
#include "gb_engine.hpp"

namespace ffr {

using detail::Reducers;
using detail::Vec;
using detail::VTerm;

namespace {

Vec to_vec(const Poly& f, std::uint32_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(VTerm{t.mono, comp, t.coef});
  return v;
}

void append(Vec& v, const Poly& f, std::uint32_t comp) {
  for (const auto& t : f.terms()) v.push_back(VTerm{t.mono, comp, t.coef});
}

Vec to_vec(const PolyRing& ring, const FreeModuleElem& e, std::uint32_t offset) {
  Vec v;
  for (std::size_t i = 0; i < e.coords.size(); ++i) append(v, e.coords[i], offset + static_cast<std::uint32_t>(i));
  return detail::sorted_vec(ring, std::move(v));
}

// Terms of one component, in the ring's order already.
Poly component(const Ring& ring, const Vec& v, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back(Term{t.m, t.c});
  return Poly::from_terms(ring, std::move(terms));
}

FreeModuleElem to_elem(const Ring& ring, const Vec& v, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + rank) continue;
    parts[t.comp - offset].push_back(Term{t.m, t.c});
  }
  FreeModuleElem e{ring, {}};
  for (auto& p : parts) e.coords.push_back(Poly::from_terms(ring, std::move(p)));
  return e;
}

void check_elems(const Ring& ring, std::size_t rank, const std::vector<FreeModuleElem>& elems) {
  for (const auto& e : elems) {
    if (e.rank() != rank) throw RingMismatch("free module elements of different ranks");
    for (const auto& c : e.coords) require_same_ring(ring, c.ring());
  }
}

std::vector<Poly> polys_from(const Ring& ring, const std::vector<Vec>& gb) {
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (const auto& g : gb) out.push_back(component(ring, g, 0));
  return out;
}

std::vector<Poly> compute_gb(const Ring& ring, const std::vector<Poly>& gens) {
  std::vector<Vec> in;
  in.reserve(gens.size());
  for (const auto& g : gens) in.push_back(to_vec(g, 0));
  return polys_from(ring, detail::reduced_gb(*ring, std::move(in), true));
}

// Gröbner basis elements of `gens` over `ext` that avoid every variable flagged
// in `drop`, mapped into `target`.
std::vector<Poly> eliminate_in(const Ring& ext, const std::vector<Poly>& gens, const std::vector<bool>& drop,
                               const Ring& target) {
  std::vector<Poly> out;
  for (const auto& g : compute_gb(ext, gens)) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < drop.size() && free; ++v)
        if (drop[v] && t.mono[v] != 0) free = false;
      if (!free) break;
    }
    if (free) out.push_back(g.map_to(target));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- IdealGens

struct IdealGens::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> gb;
};

IdealGens::IdealGens(Ring ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& IdealGens::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb.emplace(buchberger(*this)); });
  return *cache_->gb;
}

// ---------------------------------------------------------------- GroebnerBasis

struct GroebnerBasis::Index {
  std::vector<Vec> vecs;
  Reducers red;
  explicit Index(const std::vector<Poly>& basis) {
    for (const auto& b : basis) vecs.push_back(to_vec(b, 0));
    red = Reducers(vecs);
  }
};

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Poly> basis)
    : ring_(std::move(ring)), basis_(std::move(basis)), index_(std::make_unique<Index>(basis_)) {}
GroebnerBasis::~GroebnerBasis() = default;
GroebnerBasis::GroebnerBasis(const GroebnerBasis& o)
    : ring_(o.ring_), basis_(o.basis_), index_(std::make_unique<Index>(basis_)) {}
GroebnerBasis& GroebnerBasis::operator=(const GroebnerBasis& o) {
  if (this != &o) {
    ring_ = o.ring_;
    basis_ = o.basis_;
    index_ = std::make_unique<Index>(basis_);
  }
  return *this;
}
GroebnerBasis::GroebnerBasis(GroebnerBasis&&) noexcept = default;
GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis&&) noexcept = default;

Poly GroebnerBasis::reduce(const Poly& f) const {
  Poly g = f.ring().get() == ring_.get() ? f : f.map_to(ring_);
  Vec r = detail::reduce_full(*ring_, to_vec(g, 0), index_->red);
  return component(ring_, r, 0);
}

GroebnerBasis buchberger(const IdealGens& ideal) {
  return GroebnerBasis(ideal.ring(), compute_gb(ideal.ring(), ideal.gens()));
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  return gb.reduce(f);
}

// ---------------------------------------------------------------- ideal calculus

bool ideal_contains(const IdealGens& ideal, const Poly& f) { return ideal.groebner().contains(f.map_to(ideal.ring())); }

bool ideal_contains(const IdealGens& ideal, const IdealGens& sub) {
  const auto& gb = ideal.groebner();
  return std::all_of(sub.gens().begin(), sub.gens().end(),
                     [&](const Poly& g) { return gb.contains(g.map_to(ideal.ring())); });
}

bool ideal_equal(const IdealGens& a, const IdealGens& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

bool is_unit_ideal(const IdealGens& ideal) { return ideal.groebner().is_unit(); }

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealGens(a.ring(), std::move(gens));
}

IdealGens ideal_product(const IdealGens& a, const IdealGens& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return IdealGens(a.ring(), std::move(gens));
}

IdealGens ideal_power(const IdealGens& a, unsigned e) {
  IdealGens r(a.ring(), {Poly::constant(a.ring(), 1)});
  for (unsigned i = 0; i < e; ++i) r = ideal_product(r, a);
  return r;
}

IdealGens ideal_intersection(const IdealGens& a, const IdealGens& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& R = a.ring();
  if (a.empty() || b.empty()) return IdealGens(R);
  auto t = fresh_names(*R, 1);
  Ring E = elimination_ring(R, t);
  Poly tv = Poly::variable(E, R->arity());
  Poly one_minus_t = Poly::constant(E, 1) - tv;
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(tv * f.map_to(E));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.map_to(E));
  std::vector<bool> drop(E->arity(), false);
  drop[R->arity()] = true;
  return IdealGens(R, eliminate_in(E, gens, drop, R));
}

IdealGens ideal_colon(const IdealGens& ideal, const Poly& f) {
  const auto& R = ideal.ring();
  require_same_ring(R, f.ring());
  if (f.is_zero()) return IdealGens(R, {Poly::constant(R, 1)});
  IdealGens inter = ideal_intersection(ideal, IdealGens(R, {f}));
  std::vector<Poly> out;
  for (const auto& h : inter.gens()) {
    auto q = exact_divide(h, f);
    if (!q) throw VerificationFailure("intersection element not divisible by the colon polynomial");
    out.push_back(std::move(*q));
  }
  return IdealGens(R, std::move(out));
}

IdealGens ideal_colon(const IdealGens& ideal, const IdealGens& by) {
  require_same_ring(ideal.ring(), by.ring());
  IdealGens acc(ideal.ring(), {Poly::constant(ideal.ring(), 1)});
  bool first = true;
  for (const auto& g : by.gens()) {
    IdealGens c = ideal_colon(ideal, g);
    acc = first ? c : ideal_intersection(acc, c);
    first = false;
  }
  return acc;
}

IdealGens saturation(const IdealGens& ideal, const Poly& f) {
  const auto& R = ideal.ring();
  require_same_ring(R, f.ring());
  if (f.is_zero()) return IdealGens(R, {Poly::constant(R, 1)});
  auto t = fresh_names(*R, 1);
  Ring E = elimination_ring(R, t);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.map_to(E));
  gens.push_back(Poly::constant(E, 1) - Poly::variable(E, R->arity()) * f.map_to(E));
  std::vector<bool> drop(E->arity(), false);
  drop[R->arity()] = true;
  return IdealGens(R, eliminate_in(E, gens, drop, R));
}

IdealGens saturation_by_iteration(const IdealGens& ideal, const Poly& f) {
  IdealGens cur = ideal;
  for (;;) {
    IdealGens next = ideal_colon(cur, f);
    if (ideal_contains(cur, next)) return cur;
    cur = next;
  }
}

IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& vars) {
  const auto& R = ideal.ring();
  std::vector<bool> drop(R->arity(), false);
  MonomialOrder::Block head{OrderKind::grevlex, {}}, tail{OrderKind::grevlex, {}};
  for (const auto& v : vars) {
    auto i = R->index_of(v);
    if (!i) throw RingMismatch("unknown variable '" + v + "'");
    drop[*i] = true;
  }
  for (std::size_t i = 0; i < R->arity(); ++i) (drop[i] ? head : tail).vars.push_back(i);
  std::vector<MonomialOrder::Block> blocks;
  if (!head.vars.empty()) blocks.push_back(head);
  if (!tail.vars.empty()) blocks.push_back(tail);
  Ring E = make_ring_unchecked(R->field(), R->vars(), MonomialOrder::blocks(blocks, R->arity()));
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.map_to(E));
  return IdealGens(R, eliminate_in(E, gens, drop, R));
}

IdealGens initial_ideal(const IdealGens& ideal) {
  std::vector<Poly> lead;
  for (const auto& g : ideal.groebner().basis()) lead.push_back(Poly::monomial(ideal.ring(), g.lead_monomial()));
  return IdealGens(ideal.ring(), std::move(lead));
}

int krull_dimension(const IdealGens& ideal) {
  const auto& gb = ideal.groebner();
  if (gb.is_unit()) return -1;
  const std::size_t n = ideal.ring()->arity();
  if (n > 30) throw PreconditionError("krull_dimension: too many variables for subset enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.basis()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead_monomial()[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool radical_membership(const Poly& f, const IdealGens& ideal) {
  const auto& R = ideal.ring();
  Poly g = f.map_to(R);
  if (g.is_zero()) return true;
  auto t = fresh_names(*R, 1);
  Ring E = extend_ring(R, t);
  std::vector<Poly> gens;
  for (const auto& h : ideal.gens()) gens.push_back(h.map_to(E));
  gens.push_back(Poly::constant(E, 1) - Poly::variable(E, R->arity()) * g.map_to(E));
  return is_unit_ideal(IdealGens(E, std::move(gens)));
}

// ---------------------------------------------------------------- free modules

FreeModuleElem FreeModuleElem::zero(const Ring& ring, std::size_t rank) {
  return FreeModuleElem{ring, std::vector<Poly>(rank, Poly(ring))};
}

FreeModuleElem FreeModuleElem::unit(const Ring& ring, std::size_t rank, std::size_t i) {
  auto e = zero(ring, rank);
  e.coords.at(i) = Poly::constant(ring, 1);
  return e;
}

bool FreeModuleElem::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Poly& p) { return p.is_zero(); });
}

FreeModuleElem FreeModuleElem::scaled(const Poly& f) const {
  FreeModuleElem r{ring, {}};
  for (const auto& c : coords) r.coords.push_back(c * f);
  return r;
}

FreeModuleElem& FreeModuleElem::operator+=(const FreeModuleElem& o) {
  if (o.rank() != rank()) throw RingMismatch("rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

FreeModuleElem& FreeModuleElem::operator-=(const FreeModuleElem& o) {
  if (o.rank() != rank()) throw RingMismatch("rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

FreeModuleElem FreeModuleElem::map_to(const Ring& target) const {
  FreeModuleElem r{target, {}};
  for (const auto& c : coords) r.coords.push_back(c.map_to(target));
  return r;
}

struct ModuleGB::Impl {
  std::vector<Vec> gb;
  Reducers red;
};

ModuleGB::ModuleGB(Ring ring, std::size_t rank, const std::vector<FreeModuleElem>& gens)
    : ring_(std::move(ring)), rank_(rank), impl_(std::make_unique<Impl>()) {
  check_elems(ring_, rank_, gens);
  std::vector<Vec> in;
  for (const auto& g : gens) in.push_back(to_vec(*ring_, g, 0));
  impl_->gb = detail::reduced_gb(*ring_, std::move(in), rank_ == 1);
  impl_->red = Reducers(impl_->gb);
}

ModuleGB::~ModuleGB() = default;
ModuleGB::ModuleGB(ModuleGB&&) noexcept = default;
ModuleGB& ModuleGB::operator=(ModuleGB&&) noexcept = default;

std::vector<FreeModuleElem> ModuleGB::basis() const {
  std::vector<FreeModuleElem> out;
  for (const auto& g : impl_->gb) out.push_back(to_elem(ring_, g, rank_, 0));
  return out;
}

std::size_t ModuleGB::size() const { return impl_->gb.size(); }

FreeModuleElem ModuleGB::reduce(const FreeModuleElem& v) const {
  check_elems(ring_, rank_, {v});
  return to_elem(ring_, detail::reduce_full(*ring_, to_vec(*ring_, v, 0), impl_->red), rank_, 0);
}

bool ModuleGB::is_everything() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (!contains(FreeModuleElem::unit(ring_, rank_, i))) return false;
  return true;
}

struct Lifter::Impl {
  Ring ring;
  std::size_t rank;
  std::vector<FreeModuleElem> gens;
  std::vector<Vec> gb;
  Reducers red;
};

Lifter::Lifter(Ring ring, std::size_t rank, std::vector<FreeModuleElem> gens) : impl_(std::make_unique<Impl>()) {
  check_elems(ring, rank, gens);
  impl_->ring = ring;
  impl_->rank = rank;
  const auto q = static_cast<std::uint32_t>(rank);
  std::vector<Vec> in;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Vec v = to_vec(*ring, gens[j], 0);
    v.push_back(VTerm{Monomial(ring->arity()), q + static_cast<std::uint32_t>(j), Coeff{1}});
    in.push_back(detail::sorted_vec(*ring, std::move(v)));
  }
  impl_->gens = std::move(gens);
  impl_->gb = detail::reduced_gb(*ring, std::move(in), false);
  impl_->red = Reducers(impl_->gb);
}

Lifter::~Lifter() = default;
Lifter::Lifter(Lifter&&) noexcept = default;
Lifter& Lifter::operator=(Lifter&&) noexcept = default;

std::optional<std::vector<Poly>> Lifter::lift(const FreeModuleElem& v) const {
  const auto& I = *impl_;
  check_elems(I.ring, I.rank, {v});
  const auto q = static_cast<std::uint32_t>(I.rank);
  Vec r = detail::reduce_top(*I.ring, to_vec(*I.ring, v, 0), I.red, q);
  if (!r.empty() && r.front().comp < q) return std::nullopt;
  FreeModuleElem neg = to_elem(I.ring, r, I.gens.size(), q);
  std::vector<Poly> coeffs;
  FreeModuleElem check = FreeModuleElem::zero(I.ring, I.rank);
  for (std::size_t j = 0; j < I.gens.size(); ++j) {
    coeffs.push_back(-neg.coords[j]);
    check += I.gens[j].scaled(coeffs.back());
  }
  if (!(check == v)) throw VerificationFailure("module lift failed re-substitution");
  return coeffs;
}

std::vector<FreeModuleElem> Lifter::syzygies() const {
  const auto& I = *impl_;
  const auto q = static_cast<std::uint32_t>(I.rank);
  std::vector<FreeModuleElem> out;
  for (const auto& g : I.gb)
    if (!g.empty() && g.front().comp >= q) out.push_back(to_elem(I.ring, g, I.gens.size(), q));
  return out;
}

std::vector<FreeModuleElem> syzygy_module(const std::vector<FreeModuleElem>& vectors) {
  if (vectors.empty()) return {};
  Lifter L(vectors.front().ring, vectors.front().rank(), vectors);
  auto syz = L.syzygies();
  for (const auto& s : syz) {
    FreeModuleElem sum = FreeModuleElem::zero(vectors.front().ring, vectors.front().rank());
    for (std::size_t j = 0; j < vectors.size(); ++j) sum += vectors[j].scaled(s.coords[j]);
    if (!sum.is_zero()) throw VerificationFailure("syzygy does not annihilate the input");
  }
  return syz;
}

std::optional<std::vector<Poly>> module_membership(const FreeModuleElem& v, const std::vector<FreeModuleElem>& gens) {
  if (gens.empty()) {
    if (v.is_zero()) return std::vector<Poly>{};
    return std::nullopt;
  }
  return Lifter(v.ring, v.rank(), gens).lift(v);
}

std::vector<FreeModuleElem> module_quotient(const Ring& ring, std::size_t rank,
                                            const std::vector<FreeModuleElem>& submodule, const Poly& f) {
  check_elems(ring, rank, submodule);
  std::vector<FreeModuleElem> out;
  if (f.is_zero()) {
    for (std::size_t i = 0; i < rank; ++i) out.push_back(FreeModuleElem::unit(ring, rank, i));
    return out;
  }
  const auto q = static_cast<std::uint32_t>(rank);
  std::vector<Vec> in;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec v = to_vec(f, static_cast<std::uint32_t>(i));
    v.push_back(VTerm{Monomial(ring->arity()), q + static_cast<std::uint32_t>(i), Coeff{1}});
    in.push_back(detail::sorted_vec(*ring, std::move(v)));
  }
  for (const auto& n : submodule) in.push_back(to_vec(*ring, n, 0));
  for (const auto& g : detail::reduced_gb(*ring, std::move(in), false))
    if (!g.empty() && g.front().comp >= q) out.push_back(to_elem(ring, g, rank, q));
  return out;
}

std::vector<FreeModuleElem> module_intersection(const Ring& ring, std::size_t rank,
                                                const std::vector<FreeModuleElem>& a,
                                                const std::vector<FreeModuleElem>& b) {
  check_elems(ring, rank, a);
  check_elems(ring, rank, b);
  const auto q = static_cast<std::uint32_t>(rank);
  std::vector<Vec> in;
  for (const auto& x : a) {
    Vec v = to_vec(*ring, x, 0);
    Vec w = to_vec(*ring, x, q);
    v.insert(v.end(), w.begin(), w.end());
    in.push_back(detail::sorted_vec(*ring, std::move(v)));
  }
  for (const auto& y : b) in.push_back(to_vec(*ring, y, 0));
  std::vector<FreeModuleElem> out;
  for (const auto& g : detail::reduced_gb(*ring, std::move(in), false))
    if (!g.empty() && g.front().comp >= q) out.push_back(to_elem(ring, g, rank, q));
  return out;
}

}  // namespace ffr
