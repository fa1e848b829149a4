#include "ffr/monomial_ideal.hpp"

#include <algorithm>
#include <string>

#include "ffr/errors.hpp"

namespace ffr {

MonomialList MonomialList::from_polys(const std::vector<Poly>& polys) {
  if (polys.empty()) throw PreconditionError("monomial list needs at least one monomial to fix its ring");
  MonomialList out{polys.front().ring(), {}};
  for (const auto& p : polys) {
    require_same_ring(out.ring, p.ring());
    if (p.size() != 1 || p.lead_coeff() != Coeff(1)) throw PreconditionError("not a monic monomial: " + to_string(p));
    out.monomials.push_back(p.lead_monomial());
  }
  return out;
}

MonomialList MonomialList::parse(const Ring& ring, std::string_view src) {
  std::vector<Poly> polys;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t comma = src.find(',', start);
    if (comma == std::string_view::npos) comma = src.size();
    polys.push_back(parse_poly(src.substr(start, comma - start), ring));
    start = comma + 1;
  }
  return from_polys(polys);
}

Monomial MonomialList::lcm_of(const Subset& J) const {
  Monomial acc(ring->arity());
  for (int j : J) acc = lcm(acc, monomials[static_cast<std::size_t>(j)]);
  return acc;
}

std::vector<FreeModuleElem> monomial_syzygies(const MonomialList& m) {
  const std::size_t r = m.size();
  std::vector<FreeModuleElem> out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Monomial l = lcm(m.monomials[i], m.monomials[j]);
      FreeModuleElem v = FreeModuleElem::zero(m.ring, r);
      v.coords[i] = Poly::monomial(m.ring, l / m.monomials[i]);
      v.coords[j] = -Poly::monomial(m.ring, l / m.monomials[j]);
      out.push_back(std::move(v));
    }
  return out;
}

TaylorChain TaylorComplex::d(const TaylorChain& x) const {
  TaylorChain out;
  for (const auto& [J, c] : x) {
    const Monomial top = gens.lcm_of(J);
    for (std::size_t pos = 0; pos < J.size(); ++pos) {
      Subset rest = without(J, J[pos]);
      Poly term = c * Poly::monomial(gens.ring, top / gens.lcm_of(rest), pos % 2 ? Coeff(-1) : Coeff(1));
      auto [it, fresh] = out.emplace(rest, term);
      if (!fresh) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

TaylorChain TaylorComplex::h(const Monomial& p, const Subset& J) const {
  const Monomial lp = gens.lcm_of(J) * p;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens.monomials[i].divides(lp)) continue;
    const int ii = static_cast<int>(i);
    if (std::find(J.begin(), J.end(), ii) != J.end()) return {};
    Subset Jp;
    disjoint_union(J, {ii}, Jp);
    return {{Jp, Poly::monomial(gens.ring, lp / gens.lcm_of(Jp))}};
  }
  return {};
}

TaylorChain TaylorComplex::h(const TaylorChain& x) const {
  TaylorChain out;
  for (const auto& [J, c] : x)
    for (const auto& t : c.terms())
      for (auto& [K, v] : h(t.mono, J)) {
        Poly term = v.scaled(t.coef);
        auto [it, fresh] = out.emplace(K, term);
        if (!fresh) {
          it->second += term;
          if (it->second.is_zero()) out.erase(it);
        }
      }
  return out;
}

TaylorComplex taylor_complex(const MonomialList& m) {
  const int r = static_cast<int>(m.size());
  std::vector<Matrix> maps;
  TaylorComplex T{m, FreeComplex(FPAlgebra(m.ring), {}, std::nullopt, 1)};
  for (int k = 1; k <= r; ++k) {
    auto src = subsets_colex(r, k);
    Matrix M(m.ring, subsets_colex(r, k - 1).size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [J, v] : T.d({{src[c], Poly::constant(m.ring, 1)}})) M.at(colex_rank(J), c) = v;
    maps.push_back(std::move(M));
  }
  T.complex = FreeComplex(FPAlgebra(m.ring), std::move(maps), std::nullopt, 1);
  return T;
}

HomotopyCheck homotopy_identity_check(const TaylorComplex& T, const std::vector<std::pair<Monomial, Subset>>& samples) {
  HomotopyCheck out;
  for (const auto& [p, J] : samples) {
    const Poly pp = Poly::monomial(T.gens.ring, p);
    if (J.empty()) {
      bool in_ideal = false;
      for (const auto& mi : T.gens.monomials) in_ideal = in_ideal || mi.divides(p);
      if (!in_ideal) {
        ++out.skipped;
        continue;
      }
    }
    ++out.checked;
    TaylorChain x{{J, pp}};
    TaylorChain sum = T.d(T.h(x));
    for (auto& [K, v] : T.h(T.d(x))) {
      auto [it, fresh] = sum.emplace(K, v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) sum.erase(it);
      }
    }
    if (sum != x) {
      out.holds = false;
      if (!out.counterexample) out.counterexample = std::make_pair(p, J);
    }
  }
  return out;
}

HomotopyCheck homotopy_identity_check(const TaylorComplex& T, const std::vector<Monomial>& ps) {
  std::vector<std::pair<Monomial, Subset>> samples;
  for (const auto& J : all_subsets(static_cast<int>(T.gens.size())))
    for (const auto& p : ps) samples.emplace_back(p, J);
  return homotopy_identity_check(T, samples);
}

bool is_taylor_minimal(const MonomialList& m) {
  for (const auto& J : all_subsets(static_cast<int>(m.size())))
    for (int j : J)
      if (m.monomials[static_cast<std::size_t>(j)].divides(m.lcm_of(without(J, j)))) return false;
  return true;
}

}  // namespace ffr
