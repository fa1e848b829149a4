#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "ffr/cayley.hpp"
#include "ffr/errors.hpp"
#include "ffr/monomial_ideal.hpp"

namespace ffr::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

using json = nlohmann::json;

struct Options {
  std::string ring, field, order, out;
  bool verbose = false;
  std::string ideal, by, poly, module, seq, c, a, U, complex, matrix, alpha, P, Q, monomials, samples;
  std::string x_var = "X", y_var = "Y";
  std::optional<int> atleast, degree, n;
  bool check_homotopy = false, minimal = false;
};

// ---- input documents

// Inline JSON when the argument starts with '[' or '{', otherwise a file path.
json load_document(const std::string& arg, const std::string& flag) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw SchemaError(flag + ": '" + arg + "' is neither inline JSON nor a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError(flag + ": malformed JSON");
  return j;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
      throw SchemaError(where + ": unknown key '" + key + "'");
  }
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(where + ": expected a string entry");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> string_rows(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) rows.push_back(string_list(r, where));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw SchemaError(where + ": rows of different lengths");
  return rows;
}

// Ideals are a bare array or {"gens": [...]}.
std::vector<std::string> ideal_strings(const json& j, const std::string& where) {
  if (j.is_object()) {
    check_keys(j, {"gens"}, where);
    if (!j.contains("gens")) throw SchemaError(where + ": missing 'gens'");
    return string_list(j["gens"], where + ".gens");
  }
  return string_list(j, where);
}

// Matrices are a bare array of rows or {"matrix": [...]}.
std::vector<std::vector<std::string>> matrix_strings(const json& j, const std::string& where) {
  if (j.is_object()) {
    check_keys(j, {"matrix"}, where);
    if (!j.contains("matrix")) throw SchemaError(where + ": missing 'matrix'");
    return string_rows(j["matrix"], where + ".matrix");
  }
  return string_rows(j, where);
}

std::vector<Poly> parse_polys(const std::vector<std::string>& src, const Ring& ring) {
  std::vector<Poly> out;
  for (const auto& s : src) out.push_back(parse_poly(s, ring));
  return out;
}

Matrix parse_matrix(const json& j, const std::string& where, const Ring& ring) {
  auto rows = matrix_strings(j, where);
  return Matrix::parse(ring, rows, rows.empty() ? 0 : rows.front().size());
}

std::vector<Poly> ideal_of(const json& in, const char* key, const Ring& ring) {
  if (!in.contains(key)) throw SchemaError(std::string("--") + key + " is required");
  return parse_polys(ideal_strings(in[key], key), ring);
}

// {"matrix": rows} is a cokernel, {"free": q} is A^q, {"quotient": gens} is A/⟨gens⟩; default A.
AModule module_of(const json& in, const FPAlgebra& A) {
  if (!in.contains("module")) return AModule::free(A, 1);
  const json& m = in["module"];
  check_keys(m, {"matrix", "free", "quotient"}, "module");
  if (m.size() != 1) throw SchemaError("module: exactly one of 'matrix', 'free', 'quotient' is required");
  if (m.contains("free")) {
    if (!m["free"].is_number_unsigned()) throw SchemaError("module.free: expected a nonnegative integer");
    return AModule::free(A, m["free"].get<std::size_t>());
  }
  if (m.contains("quotient")) return AModule::quotient(A, parse_polys(string_list(m["quotient"], "module.quotient"), A.ring()));
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : string_rows(m["matrix"], "module.matrix")) rows.push_back(parse_polys(r, A.ring()));
  return AModule::cokernel(A, rows);
}

FreeComplex complex_of(const json& in, const FPAlgebra& A) {
  if (!in.contains("complex")) throw SchemaError("--complex is required");
  const json& c = in["complex"];
  check_keys(c, {"matrices", "expected_ranks", "base_size"}, "complex");
  if (!c.contains("matrices") || !c["matrices"].is_array()) throw SchemaError("complex: 'matrices' must be an array");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < c["matrices"].size(); ++k)
    maps.push_back(parse_matrix(c["matrices"][k], "complex.matrices[" + std::to_string(k) + "]", A.ring()));
  std::optional<std::vector<int>> ranks;
  if (c.contains("expected_ranks")) {
    if (!c["expected_ranks"].is_array()) throw SchemaError("complex.expected_ranks: expected an array");
    ranks.emplace();
    for (const auto& r : c["expected_ranks"]) {
      if (!r.is_number_integer()) throw SchemaError("complex.expected_ranks: expected integers");
      ranks->push_back(r.get<int>());
    }
  }
  std::size_t base = 0;
  if (c.contains("base_size")) {
    if (!c["base_size"].is_number_unsigned()) throw SchemaError("complex.base_size: expected a nonnegative integer");
    base = c["base_size"].get<std::size_t>();
  }
  return FreeComplex(A, std::move(maps), std::move(ranks), base);
}

// ---- ring resolution

void scan_identifiers(const std::string& s, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string name = s.substr(i, j - i);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
      i = j;
    } else if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    } else {
      ++i;
    }
  }
}

void scan_identifiers(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) scan_identifiers(j.get<std::string>(), out);
  else if (j.is_structured())
    for (const auto& e : j) scan_identifiers(e, out);
}

// Fills in vars (first appearance across the inputs when absent), field and order.
json resolve_ring(json doc, const json& inputs, const Options& o, const std::set<std::string>& excluded) {
  check_keys(doc, {"vars", "field", "order", "relations"}, "ring");
  if (!o.field.empty()) doc["field"] = o.field;
  if (!o.order.empty()) doc["order"] = o.order;
  if (!doc.contains("field")) doc["field"] = "Q";
  if (!doc.contains("order")) doc["order"] = "grevlex";
  if (!doc.contains("relations")) doc["relations"] = json::array();
  if (!doc["field"].is_string() || !doc["order"].is_string()) throw SchemaError("ring: 'field' and 'order' must be strings");
  string_list(doc["relations"], "ring.relations");
  if (!doc.contains("vars")) {
    std::vector<std::string> names;
    for (const auto& [key, value] : inputs.items())
      if (key != "command" && key != "x_var" && key != "y_var") scan_identifiers(value, names);
    scan_identifiers(doc["relations"], names);
    std::erase_if(names, [&](const std::string& v) { return excluded.count(v) > 0; });
    doc["vars"] = names;
  }
  string_list(doc["vars"], "ring.vars");
  return doc;
}

FPAlgebra algebra_of(const json& ring) {
  const CoefField field = CoefField::parse(ring["field"].get<std::string>());
  const OrderKind order = parse_order_kind(ring["order"].get<std::string>());
  Ring R = make_ring(field, ring["vars"].get<std::vector<std::string>>(), order);
  return FPAlgebra(R, parse_polys(ring["relations"].get<std::vector<std::string>>(), R));
}

// ---- report assembly

struct Report {
  Ring base;
  std::string verdict = "computed";
  json records = json::array();
  json witnesses = json::array();

  json entry(const std::string& label, const Ring& ring) const {
    json w = {{"label", label}};
    if (ring && !ring->same_as(*base)) w["vars"] = ring->vars();
    return w;
  }
  void polys(const std::string& label, const std::vector<Poly>& ps) {
    json w = entry(label, ps.empty() ? base : ps.front().ring());
    json list = json::array();
    for (const auto& p : ps) list.push_back(to_string(p));
    w["polys"] = std::move(list);
    witnesses.push_back(std::move(w));
  }
  void matrix(const std::string& label, const Matrix& M) {
    json w = entry(label, M.ring());
    w["matrix"] = M.to_strings();
    witnesses.push_back(std::move(w));
  }
  void record(json r) { records.push_back(std::move(r)); }
};

json certificate(Report& r, const std::string& label, const DepthCertificate& c) {
  json j = {{"holds", c.holds}, {"requested", c.requested}, {"infinite", c.infinite}};
  if (!c.holds) j["failed_index"] = c.failed_index;
  if (!c.sequence.empty()) {
    r.polys(label + ".sequence", c.sequence);
    j["sequence"] = label + ".sequence";
  }
  if (c.witness) {
    r.polys(label + ".witness", c.witness->coords);
    j["witness"] = label + ".witness";
  }
  return j;
}

std::vector<FreeModuleElem> as_vectors(const std::vector<Poly>& ps) {
  std::vector<FreeModuleElem> out;
  for (const auto& p : ps) out.push_back({p.ring(), {p}});
  return out;
}

std::optional<std::vector<Poly>> lift_poly(const Poly& f, const std::vector<Poly>& gens) {
  if (gens.empty()) return f.is_zero() ? std::optional<std::vector<Poly>>(std::vector<Poly>{}) : std::nullopt;
  return module_membership({f.ring(), {f}}, as_vectors(gens));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

std::size_t count_of(const std::optional<int>& v, const char* flag) {
  if (!v) throw SchemaError(std::string(flag) + " is required");
  if (*v < 0) throw SchemaError(std::string(flag) + " must be nonnegative");
  return static_cast<std::size_t>(*v);
}

// ---- commands over ideals (I + J inside k[X])

void cmd_gb(const json& in, const FPAlgebra& A, Report& r) {
  const IdealGens I = A.lift_ideal(ideal_of(in, "ideal", A.ring()));
  const auto& basis = I.groebner().basis();
  for (const auto& g : basis) require(lift_poly(g, I.gens()).has_value(), "basis element outside the ideal");
  for (const auto& f : I.gens()) require(I.groebner().contains(f), "generator not reduced to zero");
  r.record({{"condition", "groebner_basis"}, {"size", basis.size()}, {"order", to_string(A.ring()->order().leading_kind())}});
  r.polys("basis", basis);
}

void cmd_member(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("poly")) throw SchemaError("--poly is required");
  const IdealGens I = A.lift_ideal(ideal_of(in, "ideal", A.ring()));
  const Poly f = parse_poly(in["poly"].get<std::string>(), A.ring());
  const Poly nf = normal_form(f, I.groebner());
  if (nf.is_zero()) {
    auto cof = lift_poly(f, I.gens());
    require(cof.has_value(), "zero normal form without a lift");
    r.verdict = "member";
    r.record({{"condition", "membership"}, {"member", true}, {"cofactors", "cofactors"}});
    r.polys("cofactors", *cof);
  } else {
    require(normal_form(nf, I.groebner()) == nf, "normal form is not idempotent");
    require(lift_poly(f - nf, I.gens()).has_value(), "f - NF(f) outside the ideal");
    r.verdict = "not a member";
    r.record({{"condition", "membership"}, {"member", false}, {"normal_form", "normal_form"}});
    r.polys("normal_form", {nf});
  }
}

void cmd_colon(const json& in, const FPAlgebra& A, Report& r) {
  const IdealGens I = A.lift_ideal(ideal_of(in, "ideal", A.ring()));
  const IdealGens by(A.ring(), ideal_of(in, "by", A.ring()));
  const IdealGens C = ideal_colon(I, by);
  require(ideal_contains(C, I), "ideal not contained in its colon");
  require(ideal_contains(I, ideal_product(C, by)), "colon times divisor escapes the ideal");
  r.record({{"condition", "colon"}, {"size", C.groebner().basis().size()}});
  r.polys("colon", C.groebner().basis());
}

void cmd_sat(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("poly")) throw SchemaError("--poly is required");
  const IdealGens I = A.lift_ideal(ideal_of(in, "ideal", A.ring()));
  const Poly f = parse_poly(in["poly"].get<std::string>(), A.ring());
  const IdealGens S = saturation(I, f);
  require(ideal_contains(S, I), "ideal not contained in its saturation");
  require(ideal_equal(ideal_colon(S, f), S), "saturation is not stable under one more colon");
  r.record({{"condition", "saturation"}, {"size", S.groebner().basis().size()}});
  r.polys("saturation", S.groebner().basis());
}

void cmd_dim(const json& in, const FPAlgebra& A, Report& r) {
  const IdealGens I = A.lift_ideal(ideal_of(in, "ideal", A.ring()));
  const int d = krull_dimension(I);
  require(d == krull_dimension(initial_ideal(I)), "dimension differs from that of the initial ideal");
  r.verdict = d < 0 ? "unit ideal" : "dimension " + std::to_string(d);
  r.record({{"condition", "krull_dimension"}, {"dimension", d}});
}

// ---- depth

void cmd_depth(const json& in, const FPAlgebra& A, Report& r) {
  const AIdeal a{A, ideal_of(in, "ideal", A.ring())};
  const std::size_t k = count_of(in.contains("atleast") ? std::optional<int>(in["atleast"].get<int>()) : std::nullopt, "--atleast");
  const auto cert = depth_at_least(a, module_of(in, A), k);
  r.verdict = cert.holds ? "holds" : "fails at " + std::to_string(cert.failed_index);
  json rec = certificate(r, "depth", cert);
  rec["condition"] = "depth_at_least";
  r.record(std::move(rec));
}

void cmd_depth_value(const json& in, const FPAlgebra& A, Report& r) {
  const AIdeal a{A, ideal_of(in, "ideal", A.ring())};
  const auto v = depth_value(a, module_of(in, A));
  r.verdict = v.infinite ? "infinite" : "depth " + std::to_string(v.value);
  json rec = certificate(r, "depth", v.certificate);
  rec["condition"] = "depth_value";
  rec["infinite_depth"] = v.infinite;
  if (!v.infinite) rec["value"] = v.value;
  r.record(std::move(rec));
}

void cmd_secant(const json& in, const FPAlgebra& A, Report& r) {
  const auto seq = ideal_of(in, "seq", A.ring());
  const AModule E = module_of(in, A);
  const auto regular = is_E_regular_sequence(seq, E);
  const bool secant = is_completely_secant(seq, E);
  require(!regular.holds || secant, "regular sequence reported as not completely secant");
  r.verdict = secant ? "completely secant" : "not completely secant";
  json rec = certificate(r, "regular", regular);
  rec["condition"] = "regular_sequence";
  r.record(std::move(rec));
  r.record({{"condition", "completely_secant"}, {"holds", secant}});
}

void cmd_wiebe(const json& in, const FPAlgebra& A, Report& r) {
  const auto c = ideal_of(in, "c", A.ring());
  const auto a = ideal_of(in, "a", A.ring());
  if (!in.contains("U")) throw SchemaError("--U is required");
  const Matrix U = parse_matrix(in["U"], "U", A.ring());
  const auto rep = wiebe_check(c, a, U, module_of(in, A));
  r.verdict = rep.holds() ? "holds" : "fails";
  r.record({{"condition", "completely_secant"}, {"holds", rep.secant}});
  r.record({{"condition", "colon_by_det"}, {"holds", rep.colon_by_det}});
  r.record({{"condition", "colon_by_ideal"}, {"holds", rep.colon_by_ideal}, {"counterexamples", rep.counterexamples}});
  if (rep.det) r.polys("det", {*rep.det});
}

// ---- complexes

json ranks_record(const FreeComplex& C) {
  return {{"condition", "ranks"},
          {"sizes", C.sizes()},
          {"expected_ranks", C.expected_ranks()},
          {"euler_characteristic", euler_characteristic(C)}};
}

void cmd_certify(const json& in, const FPAlgebra& A, Report& r) {
  const FreeComplex C = complex_of(in, A);
  const auto rep = certify_exact(C);
  r.record(ranks_record(C));
  std::size_t failed = 0;
  for (const auto& rec : rep.records) {
    const std::string label = "D" + std::to_string(rec.index);
    r.polys(label, rec.ideal);
    json j = certificate(r, label + ".depth", rec.certificate);
    j["condition"] = "depth_of_characteristic_ideal";
    j["index"] = rec.index;
    j["required_depth"] = rec.required_depth;
    j["ideal"] = label;
    r.record(std::move(j));
    if (!rec.certificate.holds) failed = rec.index;
  }
  r.verdict = rep.exact ? "exact" : "not exact at " + std::to_string(failed);
}

void cmd_cayley(const json& in, const FPAlgebra& A, Report& r) {
  const FreeComplex C = complex_of(in, A);
  r.record(ranks_record(C));
  const auto check = is_cayley_complex(C);
  for (std::size_t k = 0; k < check.certificates.size(); ++k) {
    json j = certificate(r, "D" + std::to_string(k + 1) + ".depth", check.certificates[k]);
    j["condition"] = "cayley_depth";
    j["index"] = k + 1;
    r.record(std::move(j));
  }
  if (!check.cayley) {
    r.verdict = "not cayley";
    return;
  }
  const auto data = cayley_factorize(C);
  for (std::size_t k = 0; k < data.u.size(); ++k) {
    r.polys("u" + std::to_string(k), data.u[k]);
    r.polys("factor_ideal" + std::to_string(k), data.factor_ideals[k]);
  }
  json fac = {{"condition", "factorization"}, {"length", data.u.size() - 1}};
  if (data.det) {
    const auto det = cayley_determinant(C);
    require(A.equal(det.det, *data.det), "determinant differs from the bottom factor");
    r.polys("det", {det.det});
    r.polys("det.cofactors", det.gcd.cofactors);
    fac["det"] = "det";
    fac["strong_gcd"] = certificate(r, "det.cofactors.depth", det.gcd.depth);
  }
  r.record(std::move(fac));
  r.verdict = "cayley";
}

void cmd_hilbert_burch(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("matrix")) throw SchemaError("--matrix is required");
  const Matrix M = parse_matrix(in["matrix"], "matrix", A.ring());
  std::optional<std::vector<Poly>> alpha;
  if (in.contains("alpha")) alpha = parse_polys(ideal_strings(in["alpha"], "alpha"), A.ring());
  const auto rep = hilbert_burch(A, M, alpha);
  require(rep.annihilates, "Δ·A is not zero");
  r.polys("delta", rep.delta);
  json j = certificate(r, "delta.depth", rep.depth);
  j["condition"] = "hilbert_burch";
  j["annihilates"] = rep.annihilates;
  j["exact"] = rep.exact;
  r.record(std::move(j));
  if (alpha) {
    json s = {{"condition", "alpha"}, {"proportional", rep.scalar.has_value()}, {"strong_gcd", rep.gcd.has_value()}};
    if (rep.scalar) r.polys("alpha.scalar", {*rep.scalar});
    r.record(std::move(s));
  }
  r.verdict = rep.exact ? "exact" : "not exact";
}

void cmd_resultant(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("P") || !in.contains("Q")) throw SchemaError("--P and --Q are required");
  const std::string x = in["x_var"].get<std::string>(), y = in["y_var"].get<std::string>();
  const Ring forms = extend_ring(A.ring(), {x, y});
  const Poly P = parse_poly(in["P"].get<std::string>(), forms);
  const Poly Q = parse_poly(in["Q"].get<std::string>(), forms);
  const std::size_t d = count_of(in.contains("d") ? std::optional<int>(in["d"].get<int>()) : std::nullopt, "--d");
  const auto S = sylvester_complex(A, P, Q, d, x, y);
  const auto det = cayley_determinant(S.complex);
  r.record({{"condition", "sylvester"}, {"p", S.p}, {"q", S.q}, {"d", S.d}, {"det", "det"}});
  r.polys("det", {det.det});
  r.matrix("S", S.S);
  r.matrix("K", S.K);
  r.verdict = "computed";
}

// ---- monomial ideals

void cmd_taylor(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("monomials")) throw SchemaError("--monomials is required");
  const auto m = MonomialList::parse(A.ring(), in["monomials"].get<std::string>());
  const auto T = taylor_complex(m);
  r.record(ranks_record(T.complex));
  for (std::size_t k = 1; k <= T.complex.length(); ++k) {
    r.matrix("d" + std::to_string(k), T.complex.map(k));
    std::vector<std::int64_t> weights;
    for (const auto& J : subsets_colex(static_cast<int>(m.size()), static_cast<int>(k))) weights.push_back(T.weight(J));
    r.record({{"condition", "weights"}, {"degree", k}, {"weights", weights}});
  }
  if (in.value("check_homotopy", false)) {
    std::vector<Monomial> ps{Monomial(A.ring()->arity())};
    if (in.contains("samples")) {
      ps.clear();
      for (const auto& p : MonomialList::parse(A.ring(), in["samples"].get<std::string>()).monomials) ps.push_back(p);
    } else {
      for (std::size_t i = 0; i < A.ring()->arity(); ++i) ps.push_back(Monomial::variable(A.ring()->arity(), i));
    }
    const auto hc = homotopy_identity_check(T, ps);
    json j = {{"condition", "homotopy"}, {"holds", hc.holds}, {"checked", hc.checked}, {"skipped", hc.skipped}};
    if (hc.counterexample) {
      j["counterexample"] = {{"multiplier", to_string(Poly::monomial(A.ring(), hc.counterexample->first))},
                             {"subset", hc.counterexample->second}};
    }
    r.record(j);
    require(hc.holds, "Taylor homotopy identity fails");
    r.verdict = "homotopy holds";
  }
  if (in.value("minimal", false)) {
    const bool minimal = is_taylor_minimal(m);
    r.record({{"condition", "minimal"}, {"holds", minimal}});
    r.verdict = minimal ? "minimal" : "not minimal";
  }
}

// ---- McCoy

void cmd_mccoy(const json& in, const FPAlgebra& A, Report& r) {
  if (!in.contains("matrix")) throw SchemaError("--matrix is required");
  const Matrix M = parse_matrix(in["matrix"], "matrix", A.ring());
  const bool injective = mccoy_injective(A, M);
  // Kernel oracle: syzygies of the columns together with J·e_i, truncated to the column part.
  std::optional<FreeModuleElem> kernel;
  if (M.cols() > 0 && M.rows() == 0) {
    if (!A.is_trivial()) kernel = FreeModuleElem::unit(A.ring(), M.cols(), 0);
  } else if (M.cols() > 0) {
    std::vector<FreeModuleElem> gens = M.columns();
    for (const auto& j : A.relations().gens())
      for (std::size_t i = 0; i < M.rows(); ++i) gens.push_back(FreeModuleElem::unit(A.ring(), M.rows(), i).scaled(j));
    for (const auto& s : syzygy_module(gens)) {
      FreeModuleElem head = FreeModuleElem::zero(A.ring(), M.cols());
      for (std::size_t c = 0; c < M.cols(); ++c) head.coords[c] = A.reduce(s.coords[c]);
      if (!head.is_zero()) {
        kernel = head;
        break;
      }
    }
  }
  require(injective == !kernel.has_value(), "McCoy criterion disagrees with the kernel computation");
  r.verdict = injective ? "injective" : "not injective";
  json j = {{"condition", "mccoy"}, {"injective", injective}};
  if (kernel) {
    r.polys("kernel", kernel->coords);
    j["kernel"] = "kernel";
  }
  r.record(std::move(j));
}

// ---- exterior self-test on basis elements

void cmd_hodge_selftest(const json& in, const FPAlgebra& A, Report& r) {
  const std::size_t nn = count_of(in.contains("n") ? std::optional<int>(in["n"].get<int>()) : std::nullopt, "--n");
  if (nn > 10) throw PreconditionError("--n is capped at 10");
  const int n = static_cast<int>(nn);
  const Ring& R = A.ring();
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (checked, failed)
  auto check = [&](const char* name, bool ok) {
    auto& t = tally[name];
    ++t.first;
    if (!ok) ++t.second;
  };
  Subset all(nn);
  std::iota(all.begin(), all.end(), 0);
  const auto top = MultiVector::basis(R, n, all);
  const auto subs = all_subsets(n);
  for (const auto& I : subs) {
    const auto eI = MultiVector::basis(R, n, I);
    const auto dI = hodge_right(eI);
    const int p = static_cast<int>(I.size());
    check("wedge_with_dual_is_top", wedge(eI, dI) == top);
    check("double_dual_sign", hodge_right(dI) == eI.scaled(Poly::constant(R, (p * (n - p)) % 2 ? -1 : 1)));
    for (const auto& J : subs) {
      const auto eJ = MultiVector::basis(R, n, J);
      if (static_cast<int>(J.size()) == n - p) check("dual_pairing_is_bracket", pairing(dI, eJ) == top_coefficient(wedge(eI, eJ)));
      if (J.size() == I.size()) {
        const auto dJ = hodge_right(eJ);
        check("dual_is_isometry", pairing(eI, eJ) == pairing(dI, dJ));
        check("pairing_is_bracket_with_dual", pairing(eI, eJ) == top_coefficient(wedge(eI, dJ)));
      }
      if (J.size() + 1 == I.size())
        for (int k = 0; k < n; ++k) {
          const auto ek = MultiVector::basis(R, n, {k});
          check("interior_adjoint_to_wedge", pairing(interior_right(eI, ek), eJ) == pairing(eI, wedge(ek, eJ)));
        }
    }
  }
  std::size_t failed = 0;
  for (const auto& [name, t] : tally) {
    r.record({{"condition", name}, {"checked", t.first}, {"failed", t.second}});
    failed += t.second;
  }
  require(failed == 0, "exterior identities fail on " + std::to_string(failed) + " basis instances");
  r.verdict = "pass";
}

using Handler = void (*)(const json&, const FPAlgebra&, Report&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"gb", cmd_gb},           {"member", cmd_member},         {"colon", cmd_colon},
      {"sat", cmd_sat},         {"dim", cmd_dim},               {"depth", cmd_depth},
      {"depth-value", cmd_depth_value},                         {"secant", cmd_secant},
      {"wiebe", cmd_wiebe},     {"certify", cmd_certify},       {"cayley", cmd_cayley},
      {"hilbert-burch", cmd_hilbert_burch},                     {"resultant", cmd_resultant},
      {"taylor", cmd_taylor},   {"mccoy", cmd_mccoy},           {"hodge-selftest", cmd_hodge_selftest},
  };
  return table;
}

void add_subcommands(CLI::App& app, Options& o) {
  auto sub = [&](const char* name, const char* about) { return app.add_subcommand(name, about); };
  auto ideal = [&](CLI::App* s, const char* flag, std::string& dst, const char* what) {
    s->add_option(flag, dst, what)->required();
  };
  auto module = [&](CLI::App* s) {
    s->add_option("--module", o.module, "module document ({\"matrix\"|\"free\"|\"quotient\": ...}); default A");
  };

  ideal(sub("gb", "reduced Gröbner basis of an ideal"), "--ideal", o.ideal, "ideal document");
  auto* member = sub("member", "ideal membership with cofactors or a normal form");
  ideal(member, "--ideal", o.ideal, "ideal document");
  member->add_option("--poly", o.poly, "polynomial")->required();
  auto* colon = sub("colon", "ideal quotient (I : K)");
  ideal(colon, "--ideal", o.ideal, "ideal document");
  ideal(colon, "--by", o.by, "ideal document for K");
  auto* sat = sub("sat", "saturation (I : f^∞)");
  ideal(sat, "--ideal", o.ideal, "ideal document");
  sat->add_option("--poly", o.poly, "polynomial f")->required();
  ideal(sub("dim", "Krull dimension of A/I"), "--ideal", o.ideal, "ideal document");

  auto* depth = sub("depth", "decide Gr(a, E) >= k");
  ideal(depth, "--ideal", o.ideal, "ideal document");
  module(depth);
  depth->add_option("--atleast", o.atleast, "k")->required();
  auto* dv = sub("depth-value", "depth of a on E");
  ideal(dv, "--ideal", o.ideal, "ideal document");
  module(dv);
  auto* secant = sub("secant", "E-regularity and complete secancy of a sequence");
  ideal(secant, "--seq", o.seq, "sequence (ideal document, order matters)");
  module(secant);
  auto* wiebe = sub("wiebe", "colon equalities for c = U·a");
  ideal(wiebe, "--c", o.c, "sequence c");
  ideal(wiebe, "--a", o.a, "sequence a");
  ideal(wiebe, "--U", o.U, "square matrix document with c = U·a");
  module(wiebe);

  ideal(sub("certify", "exactness certificate of a free complex"), "--complex", o.complex, "complex document");
  ideal(sub("cayley", "Cayley factorization of a free complex"), "--complex", o.complex, "complex document");
  auto* hb = sub("hilbert-burch", "signed maximal minors of an n × (n-1) matrix");
  ideal(hb, "--matrix", o.matrix, "matrix document");
  hb->add_option("--alpha", o.alpha, "vector with α·A = 0 to factor through Δ");
  auto* res = sub("resultant", "Cayley determinant of the Sylvester complex of two binary forms");
  res->add_option("--P", o.P, "first binary form")->required();
  res->add_option("--Q", o.Q, "second binary form")->required();
  res->add_option("--d", o.degree, "degree of the graded piece")->required();
  res->add_option("--x-var", o.x_var, "first form variable")->capture_default_str();
  res->add_option("--y-var", o.y_var, "second form variable")->capture_default_str();

  auto* taylor = sub("taylor", "Taylor resolution of a monomial ideal");
  taylor->add_option("--monomials", o.monomials, "comma-separated monomials")->required();
  taylor->add_flag("--check-homotopy", o.check_homotopy, "check d∘h + h∘d = Id on every basis element");
  taylor->add_option("--samples", o.samples, "comma-separated multiplier monomials for the homotopy check");
  taylor->add_flag("--minimal", o.minimal, "test minimality");
  ideal(sub("mccoy", "injectivity of a matrix via McCoy's criterion"), "--matrix", o.matrix, "matrix document");
  sub("hodge-selftest", "exterior algebra identities on basis elements")
      ->add_option("--n", o.n, "ambient rank")
      ->default_val(5);
}

json build_inputs(const std::string& command, const Options& o) {
  json in = {{"command", command}};
  auto doc = [&](const char* key, const std::string& v) {
    if (!v.empty()) in[key] = load_document(v, std::string("--") + key);
  };
  auto str = [&](const char* key, const std::string& v) {
    if (!v.empty()) in[key] = v;
  };
  doc("ideal", o.ideal);
  doc("by", o.by);
  doc("module", o.module);
  doc("seq", o.seq);
  doc("c", o.c);
  doc("a", o.a);
  doc("U", o.U);
  doc("complex", o.complex);
  doc("matrix", o.matrix);
  doc("alpha", o.alpha);
  str("poly", o.poly);
  str("P", o.P);
  str("Q", o.Q);
  str("monomials", o.monomials);
  str("samples", o.samples);
  if (o.atleast) in["atleast"] = *o.atleast;
  if (o.degree) in["d"] = *o.degree;
  if (o.n) in["n"] = *o.n;
  if (o.check_homotopy) in["check_homotopy"] = true;
  if (o.minimal) in["minimal"] = true;
  if (command == "resultant") {
    in["x_var"] = o.x_var;
    in["y_var"] = o.y_var;
  }
  return in;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certificates for finite free complexes over finitely presented algebras", "ffr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", o.ring, "ring document {\"vars\", \"field\", \"order\", \"relations\"}; vars default to the input's identifiers");
  app.add_option("--field", o.field, "Q or Fp:p");
  app.add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--out", o.out, "write the report to this file instead of stdout");
  app.add_flag("-v,--verbose", o.verbose, "log progress to stderr");
  add_subcommands(app, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchemaError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    json inputs = build_inputs(command, o);
    json ring_doc = json::object();
    if (!o.ring.empty()) ring_doc = load_document(o.ring, "--ring");
    std::set<std::string> excluded;
    if (command == "resultant") excluded = {o.x_var, o.y_var};
    inputs["ring"] = resolve_ring(ring_doc, inputs, o, excluded);
    const FPAlgebra A = algebra_of(inputs["ring"]);
    const std::string digest = "fnv1a64:" + hex64(fnv1a(inputs.dump()));
    if (o.verbose) err << "ffr: " << command << " over " << inputs["ring"].dump() << " (" << digest << ")\n";

    Report report;
    report.base = A.ring();
    const auto t0 = std::chrono::steady_clock::now();
    handlers().at(command)(inputs, A, report);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const json doc = {{"command", command},
                      {"inputs", inputs},
                      {"inputs_digest", digest},
                      {"verdict", report.verdict},
                      {"records", report.records},
                      {"witnesses", report.witnesses},
                      {"timing_ms", std::round(ms * 1000.0) / 1000.0}};
    const std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!(file << text)) {
        err << "ffr: cannot write " << o.out << "\n";
        return kInternal;
      }
    }
    if (o.verbose) err << "ffr: verdict '" << report.verdict << "' in " << ms << " ms\n";
    return kOk;
  } catch (const SchemaError& e) {
    err << "ffr: schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const json::exception& e) {
    err << "ffr: schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const RingMismatch& e) {
    err << "ffr: ring mismatch: " << e.what() << "\n";
    return kRingMismatch;
  } catch (const PreconditionError& e) {
    err << "ffr: precondition: " << e.what() << "\n";
    return kRingMismatch;
  } catch (const VerificationFailure& e) {
    err << "ffr: verification failure: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "ffr: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ffr::cli
