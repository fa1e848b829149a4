#include <random>

#include "doctest.h"
#include "ffr/algebra.hpp"

using namespace ffr;

namespace {

Ring qring(std::vector<std::string> vars) { return make_ring(CoefField::rationals(), std::move(vars)); }

FPAlgebra alg(const Ring& R, std::initializer_list<const char*> rels) {
  std::vector<Poly> j;
  for (auto r : rels) j.push_back(parse_poly(r, R));
  return FPAlgebra(R, j);
}

std::vector<Poly> polys(const Ring& R, std::initializer_list<const char*> src) {
  std::vector<Poly> out;
  for (auto s : src) out.push_back(parse_poly(s, R));
  return out;
}

}  // namespace

TEST_CASE("is_trivial") {
  auto R = qring({"x", "y"});
  CHECK(is_trivial(alg(R, {"x-1", "x"})));
  CHECK_FALSE(is_trivial(alg(R, {})));
  CHECK_FALSE(is_trivial(alg(R, {"x^2", "x+y", "y-x"})));
}

TEST_CASE("is_regular_element") {
  auto Rx = qring({"x"});
  CHECK_FALSE(is_regular_element(alg(Rx, {"x^2"}), parse_poly("x", Rx)));
  auto R = qring({"x", "y"});
  CHECK(is_regular_element(alg(R, {}), parse_poly("x", R)));
  auto S = qring({"x", "y", "z"});
  auto A = alg(S, {"x*(y-1)"});
  CHECK(is_regular_element(A, parse_poly("y", S)));
  CHECK_FALSE(is_regular_element(A, parse_poly("x", S)));
  CHECK_FALSE(is_regular_element(A, parse_poly("y-1", S)));
}

TEST_CASE("is_faithful_ideal") {
  auto R = qring({"x", "y"});
  CHECK(is_faithful_ideal(alg(R, {}), AIdeal{alg(R, {}), polys(R, {"x", "y"})}));
  auto Rx = qring({"x"});
  auto A = alg(Rx, {"x^2"});
  CHECK_FALSE(is_faithful_ideal(A, AIdeal{A, polys(Rx, {"x"})}));
  auto B = alg(R, {"x*y"});
  CHECK(is_faithful_ideal(B, AIdeal{B, polys(R, {"x+y"})}));
  CHECK_FALSE(is_faithful_ideal(B, AIdeal{B, polys(R, {"x"})}));
}

TEST_CASE("module_colon_element") {
  auto R = qring({"x", "y"});
  auto A = alg(R, {});
  CHECK(module_colon_element(AModule::free(A, 1), parse_poly("x", R)).empty());
  auto E = AModule::quotient(A, polys(R, {"x"}));
  auto col = module_colon_element(E, parse_poly("x", R));
  REQUIRE(col.size() == 1);
  CHECK(col[0].coords[0] == parse_poly("1", R));
  auto F = AModule::cokernel(A, {{parse_poly("x", R)}, {parse_poly("y", R)}});
  CHECK(module_colon_element(F, parse_poly("1", R)).empty());
  // coker of the column (x, y): y e₁ - x e₂ is killed by nothing regular, but e₁ is not killed by x.
  CHECK(is_regular_on(F, parse_poly("x", R)));
}

TEST_CASE("ideal_times_module_is_module") {
  auto R = qring({"x"});
  auto A = alg(R, {});
  CHECK(ideal_times_module_is_module(AIdeal{A, polys(R, {"1"})}, AModule::free(A, 2)));
  CHECK_FALSE(ideal_times_module_is_module(AIdeal{A, polys(R, {"x"})}, AModule::free(A, 1)));
  CHECK(ideal_times_module_is_module(AIdeal{A, polys(R, {"x-1"})}, AModule::quotient(A, polys(R, {"x"}))));
  CHECK(ideal_times_module_is_module(AIdeal{A, polys(R, {"x"})}, AModule::free(A, 0)));
}

TEST_CASE("annihilator") {
  auto R = qring({"x", "y"});
  auto A = alg(R, {});
  auto E = AModule::cokernel(A, {{parse_poly("x", R), parse_poly("0", R)}, {parse_poly("0", R), parse_poly("y", R)}});
  CHECK(ideal_equal(annihilator(E), IdealGens(R, polys(R, {"x*y"}))));
  CHECK(ideal_equal(annihilator(AModule::free(A, 2)), IdealGens(R)));
}

TEST_CASE("product of regular elements is regular") {
  auto S = qring({"x", "y", "z"});
  auto A = alg(S, {"x*(y-1)", "z^2*x"});
  std::vector<const char*> cands{"y", "z", "y+z", "x", "y-1", "z+1", "x+y"};
  for (auto a : cands)
    for (auto b : cands) {
      Poly f = parse_poly(a, S), g = parse_poly(b, S);
      if (is_regular_element(A, f) && is_regular_element(A, g)) CHECK(is_regular_element(A, f * g));
    }
}

TEST_CASE("faithfulness does not depend on the generating set") {
  auto R = qring({"x", "y"});
  auto A = alg(R, {"x*y"});
  CHECK(is_faithful_ideal(A, AIdeal{A, polys(R, {"x", "y"})}) ==
        is_faithful_ideal(A, AIdeal{A, polys(R, {"x+y", "y", "x^2"})}));
  CHECK(is_faithful_ideal(A, AIdeal{A, polys(R, {"x"})}) ==
        is_faithful_ideal(A, AIdeal{A, polys(R, {"x+x*y", "x^2"})}));
}

TEST_CASE("McCoy lemma: Kronecker polynomial regular iff content faithful") {
  auto R = qring({"x", "y"});
  std::mt19937 rng(29);
  std::vector<std::vector<const char*>> rels{{}, {"x^2"}, {"x*y"}, {"x^2", "x*y"}, {"y^2-x*y"}};
  std::vector<const char*> atoms{"x", "y", "x*y", "x^2", "y^2", "x+y", "x-y", "1", "0", "y+1"};
  std::uniform_int_distribution<std::size_t> pr(0, rels.size() - 1), pa(0, atoms.size() - 1), cnt(1, 3), kind(0, 2);
  int faithful_seen = 0, unfaithful_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Poly> J;
    for (auto r : rels[pr(rng)]) J.push_back(parse_poly(r, R));
    FPAlgebra A(R, J);
    AModule E = AModule::free(A, 1);
    switch (kind(rng)) {
      case 1:
        E = AModule::quotient(A, {parse_poly(atoms[pa(rng)], R)});
        break;
      case 2:
        E = AModule::cokernel(A, {{parse_poly(atoms[pa(rng)], R)}, {parse_poly(atoms[pa(rng)], R)}});
        break;
      default:
        break;
    }
    std::vector<Poly> gens;
    std::size_t k = cnt(rng);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(parse_poly(atoms[pa(rng)], R));
    bool faithful = is_faithful_on(E, gens);
    auto T = fresh_names(*R, 1);
    Poly f = kronecker_poly(R, gens, T[0]);
    bool regular = is_regular_on(E.over(f.ring()), f);
    CHECK(faithful == regular);
    (faithful ? faithful_seen : unfaithful_seen)++;
  }
  CHECK(faithful_seen > 0);
  CHECK(unfaithful_seen > 0);
}
