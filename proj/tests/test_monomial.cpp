#include <random>
#include <tuple>

#include "doctest.h"
#include "ffr/errors.hpp"
#include "ffr/monomial_ideal.hpp"

using namespace ffr;

namespace {

Ring qring(std::vector<std::string> vars) { return make_ring(CoefField::rationals(), std::move(vars)); }

// "134" → {0, 2, 3}.
Subset label(std::string_view s) {
  Subset out;
  for (char c : s) out.push_back(c - '1');
  return out;
}

using Printed = std::vector<std::tuple<const char*, const char*, const char*>>;  // row, column, entry

// Every listed entry matches and every unlisted entry in the listed columns is zero.
void check_printed(const TaylorComplex& T, std::size_t k, const Printed& entries) {
  const Matrix& M = T.complex.map(k);
  const Ring& R = T.gens.ring;
  Matrix expected(R, M.rows(), M.cols());
  for (const auto& [row, col, entry] : entries) expected.at(colex_rank(label(row)), colex_rank(label(col))) = parse_poly(entry, R);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(M.at(i, j) == expected.at(i, j));
    }
}

MonomialList random_list(std::mt19937& rng, const Ring& R, std::size_t r, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  MonomialList m{R, {}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Exponent> ex(R->arity());
    for (auto& x : ex) x = e(rng);
    m.monomials.push_back(Monomial(ex));
  }
  return m;
}

}  // namespace

TEST_CASE("monomial lists") {
  auto R = qring({"x", "y", "z"});
  auto m = MonomialList::parse(R, "x^2*y,x*y^3,x,y*z");
  REQUIRE(m.size() == 4);
  CHECK(m.poly(1) == parse_poly("x*y^3", R));
  CHECK(Poly::monomial(R, m.lcm_of({0, 1})) == parse_poly("x^2*y^3", R));
  CHECK(m.lcm_of({}).is_one());
  CHECK_THROWS_AS(MonomialList::parse(R, "x+y"), PreconditionError);
  CHECK_THROWS_AS(MonomialList::parse(R, "2*x"), PreconditionError);
  CHECK_THROWS_AS(MonomialList::parse(R, "0"), PreconditionError);
}

TEST_CASE("monomial syzygies") {
  auto R = qring({"x", "y"});
  auto s1 = monomial_syzygies(MonomialList::parse(R, "x,y"));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].coords == std::vector<Poly>{parse_poly("y", R), parse_poly("-x", R)});
  auto s2 = monomial_syzygies(MonomialList::parse(R, "x^2,x*y"));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].coords == std::vector<Poly>{parse_poly("y", R), parse_poly("-x", R)});
  CHECK(monomial_syzygies(MonomialList::parse(R, "x^3*y")).empty());
}

TEST_CASE("monomial syzygies generate the syzygy module") {
  auto R = qring({"x", "y", "z"});
  std::mt19937 rng(113);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (int t = 0; t < 30; ++t) {
    auto m = random_list(rng, R, size(rng), 3);
    std::vector<FreeModuleElem> cols;
    for (std::size_t i = 0; i < m.size(); ++i) cols.push_back(FreeModuleElem{R, {m.poly(i)}});
    auto ours = monomial_syzygies(m);
    auto full = syzygy_module(cols);
    for (const auto& s : ours) {
      Poly acc(R);
      for (std::size_t i = 0; i < m.size(); ++i) acc += s.coords[i] * m.poly(i);
      CHECK(acc.is_zero());
    }
    for (const auto& s : full) CHECK(module_membership(s, ours));
  }
}

TEST_CASE("Taylor resolution of (x²y, xy³, x, yz)") {
  auto R = qring({"x", "y", "z"});
  auto T = taylor_complex(MonomialList::parse(R, "x^2*y,x*y^3,x,y*z"));
  CHECK(T.complex.sizes() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  check_printed(T, 1, {{"", "1", "x^2*y"}, {"", "2", "x*y^3"}, {"", "3", "x"}, {"", "4", "y*z"}});
  // With m₃ = x the pair {1, 3} has lcm x²y, so e₁₃ ↦ xy e₃ - e₁.
  check_printed(T, 2, {{"1", "12", "-y^2"}, {"2", "12", "x"},   {"1", "13", "-1"},  {"3", "13", "x*y"},
                       {"1", "14", "-z"},   {"4", "14", "x^2"}, {"2", "23", "-1"},  {"3", "23", "y^3"},
                       {"2", "24", "-z"},   {"4", "24", "x*y^2"}, {"3", "34", "-y*z"}, {"4", "34", "x"}});
  CHECK(T.weight(label("12")) == 5);
  CHECK(T.weight(label("13")) == 3);

  auto hc = homotopy_identity_check(T, {Monomial(std::vector<Exponent>{0, 0, 0}), Monomial(std::vector<Exponent>{1, 0, 0}),
                                        Monomial(std::vector<Exponent>{0, 2, 0}), Monomial(std::vector<Exponent>{1, 1, 1})});
  CHECK(hc.holds);
  // p = 1 and p = y² at grade 0 lie outside the ideal.
  CHECK(hc.skipped == 2);
  CHECK(hc.checked == 16 * 4 - 2);
  CHECK(certify_exact(T.complex).exact);
  CHECK_FALSE(is_taylor_minimal(T.gens));
}

TEST_CASE("Taylor differentials d2-d4 for (x²y, xy³, xz, yz)") {
  auto R = qring({"x", "y", "z"});
  auto T = taylor_complex(MonomialList::parse(R, "x^2*y,x*y^3,x*z,y*z"));
  check_printed(T, 2, {{"1", "12", "-y^2"}, {"2", "12", "x"},     {"1", "13", "-z"},  {"3", "13", "x*y"},
                       {"1", "14", "-z"},   {"4", "14", "x^2"},   {"2", "23", "-z"},  {"3", "23", "y^3"},
                       {"2", "24", "-z"},   {"4", "24", "x*y^2"}, {"3", "34", "-y"},  {"4", "34", "x"}});
  check_printed(T, 3, {{"12", "123", "z"},   {"13", "123", "-y^2"}, {"23", "123", "x"},
                       {"12", "124", "z"},   {"14", "124", "-y^2"}, {"24", "124", "x"},
                       {"13", "134", "1"},   {"14", "134", "-1"},   {"34", "134", "x"},
                       {"23", "234", "1"},   {"24", "234", "-1"},   {"34", "234", "y^2"}});
  check_printed(T, 4, {{"123", "1234", "-1"}, {"124", "1234", "1"}, {"134", "1234", "-y^2"}, {"234", "1234", "x"}});
  const std::vector<std::pair<const char*, std::int64_t>> weights{{"1", 3},   {"2", 4},   {"3", 2},   {"4", 2},
                                                                  {"12", 5},  {"13", 4},  {"14", 4},  {"23", 5},
                                                                  {"24", 5},  {"34", 3},  {"123", 6}, {"124", 6},
                                                                  {"134", 4}, {"234", 5}, {"1234", 6}};
  for (const auto& [l, w] : weights) CHECK(T.weight(label(l)) == w);
  CHECK(homotopy_identity_check(T, {Monomial(std::vector<Exponent>{0, 0, 0}), Monomial(std::vector<Exponent>{1, 1, 1})}).holds);
}

TEST_CASE("Taylor of coprime monomials is Koszul") {
  auto R = qring({"x", "y", "z"});
  auto T = taylor_complex(MonomialList::parse(R, "x,y,z"));
  auto K = koszul_complex(FPAlgebra(R), {parse_poly("x", R), parse_poly("y", R), parse_poly("z", R)});
  CHECK(T.complex.maps() == K.maps());
  CHECK(is_taylor_minimal(T.gens));
  auto T1 = taylor_complex(MonomialList::parse(R, "x^2*z"));
  REQUIRE(T1.complex.length() == 1);
  CHECK(T1.complex.map(1) == Matrix::parse(R, {{"x^2*z"}}));
}

TEST_CASE("homotopy examples") {
  auto R = qring({"x", "y"});
  auto T = taylor_complex(MonomialList::parse(R, "x,y"));
  const Monomial one(std::vector<Exponent>{0, 0}), x(std::vector<Exponent>{1, 0});
  auto T2 = taylor_complex(MonomialList::parse(R, "x^2,y"));
  CHECK(T2.h(x, {}).empty());
  auto hx = T.h(x, {});
  REQUIRE(hx.size() == 1);
  CHECK(hx.begin()->first == Subset{0});
  CHECK(hx.begin()->second == parse_poly("1", R));
  // The least divisor of lcm(m_J)p is already in J.
  CHECK(T.h(one, {0}).empty());
  // J = {1}: x | y·x picks i = 0 ∉ J.
  auto hy = T.h(x, {1});
  REQUIRE(hy.size() == 1);
  CHECK(hy.begin()->first == Subset{0, 1});
  CHECK(hy.begin()->second == parse_poly("1", R));

  auto Rx = qring({"x"});
  auto Tx = taylor_complex(MonomialList::parse(Rx, "x"));
  std::vector<std::pair<Monomial, Subset>> samples;
  for (Exponent e = 0; e <= 3; ++e) samples.emplace_back(Monomial(std::vector<Exponent>{e}), Subset{});
  auto hc = homotopy_identity_check(Tx, samples);
  CHECK(hc.holds);
  CHECK(hc.checked == 3);
  CHECK(hc.skipped == 1);
}

TEST_CASE("grade-0 convention matches the homology of the augmented complex") {
  auto R = qring({"x", "y", "z"});
  auto T = taylor_complex(MonomialList::parse(R, "x^2*y,x*y^3,x,y*z"));
  auto image = T.complex.map(1).columns();
  for (Exponent a = 0; a <= 2; ++a)
    for (Exponent b = 0; b <= 3; ++b)
      for (Exponent c = 0; c <= 1; ++c) {
        Monomial p(std::vector<Exponent>{a, b, c});
        auto hc = homotopy_identity_check(T, {{p, Subset{}}});
        // p e_∅ is a boundary exactly when the identity is asserted, and then it holds.
        const bool boundary = module_membership(FreeModuleElem{R, {Poly::monomial(R, p)}}, image).has_value();
        CHECK(boundary == (hc.checked == 1));
        CHECK(hc.holds);
      }
}

TEST_CASE("Taylor minimality") {
  auto R = qring({"x", "y", "z"});
  auto m = MonomialList::parse(R, "x*y,x,y*z");
  CHECK_FALSE(is_taylor_minimal(m));
  auto T = taylor_complex(m);
  // The unit entries of d₃ are what breaks minimality; the e₁₂ coefficient is xyz / xy = z.
  check_printed(T, 3, {{"12", "123", "z"}, {"13", "123", "-1"}, {"23", "123", "1"}});
  CHECK(is_taylor_minimal(MonomialList::parse(R, "x,y,z")));
  CHECK_FALSE(is_taylor_minimal(MonomialList::parse(R, "x^2,x")));
  CHECK(is_taylor_minimal(MonomialList::parse(R, "x*y,y*z")));
  // Minimality means no differential entry is a unit.
  std::mt19937 rng(127);
  for (int t = 0; t < 20; ++t) {
    auto ml = random_list(rng, R, 3, 2);
    auto Tl = taylor_complex(ml);
    bool unit_entry = false;
    for (const auto& M : Tl.complex.maps())
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) unit_entry = unit_entry || (!M.at(i, j).is_zero() && M.at(i, j).is_constant());
    CHECK(is_taylor_minimal(ml) == !unit_entry);
  }
}

TEST_CASE("Taylor complexes of random monomial lists") {
  auto R = qring({"x", "y", "z"});
  std::mt19937 rng(131);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::vector<Monomial> ps;
  for (Exponent a = 0; a <= 1; ++a)
    for (Exponent b = 0; b <= 2; ++b) ps.push_back(Monomial(std::vector<Exponent>{a, b, a}));
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = size(rng);
    auto m = random_list(rng, R, r, 2);
    auto T = taylor_complex(m);
    const auto& maps = T.complex.maps();
    for (std::size_t k = 1; k < maps.size(); ++k) CHECK((maps[k - 1] * maps[k]).is_zero());
    // Degree-0 differentials for the lcm weights.
    for (std::size_t k = 1; k <= r; ++k) {
      auto rows = subsets_colex(static_cast<int>(r), static_cast<int>(k) - 1), cols = subsets_colex(static_cast<int>(r), static_cast<int>(k));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const Poly& e = T.complex.map(k).at(i, j);
          if (!e.is_zero()) CHECK(e.total_degree() + T.weight(rows[i]) == T.weight(cols[j]));
        }
    }
    auto hc = homotopy_identity_check(T, ps);
    CHECK(hc.holds);
    if (r <= 4) CHECK(certify_exact(T.complex).exact == hc.holds);
  }
}
