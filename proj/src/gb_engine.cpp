#include "gb_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ffr::detail {

namespace {

struct VTermGreater {
  const MonomialOrder* ord;
  bool operator()(const VTerm& a, const VTerm& b) const { return compare_terms(*ord, a, b) > 0; }
};

// Merges f[from..] with -c*m*g; f[from] is expected to cancel.
Vec sub_mul_tail(const PolyRing& ring, const Vec& f, std::size_t from, const Coeff& c, const Monomial& m,
                 const Vec& g) {
  const auto& k = ring.field();
  const auto& ord = ring.order();
  Vec out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  VTerm scratch;
  auto shifted = [&](std::size_t idx) {
    return VTerm{g[idx].m * m, g[idx].comp, k.neg(k.mul(c, g[idx].c))};
  };
  bool have = false;
  while (i < f.size() || j < g.size() || have) {
    if (!have && j < g.size()) {
      scratch = shifted(j++);
      have = true;
    }
    if (!have) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == f.size()) {
      out.push_back(std::move(scratch));
      have = false;
      continue;
    }
    int cmp = compare_terms(ord, f[i], scratch);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(scratch));
      have = false;
    } else {
      Coeff s = k.add(f[i].c, scratch.c);
      if (s != 0) out.push_back(VTerm{f[i].m, f[i].comp, std::move(s)});
      ++i;
      have = false;
    }
  }
  return out;
}

std::uint64_t mask_of(const Monomial& m) { return m.support_mask(); }

}  // namespace

Vec sorted_vec(const PolyRing& ring, Vec terms) {
  std::sort(terms.begin(), terms.end(), VTermGreater{&ring.order()});
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = ring.field().add(out.back().c, t.c);
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  return out;
}

Vec make_monic(const PolyRing& ring, Vec f) {
  if (f.empty() || f.front().c == 1) return f;
  Coeff inv = ring.field().inv(f.front().c);
  for (auto& t : f) t.c = ring.field().mul(t.c, inv);
  return f;
}

Reducers::Reducers(const std::vector<Vec>& gb) {
  for (const auto& g : gb) {
    if (g.empty()) continue;
    polys_.push_back(&g);
    masks_.push_back(mask_of(g.front().m));
  }
}

Reducers::Reducers(std::vector<const Vec*> gb) {
  for (const Vec* g : gb) {
    if (g->empty()) continue;
    polys_.push_back(g);
    masks_.push_back(mask_of(g->front().m));
  }
}

long Reducers::find(const VTerm& t) const {
  const std::uint64_t tm = mask_of(t.m);
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const auto& lt = polys_[i]->front();
    if (lt.comp != t.comp || (masks_[i] & ~tm) != 0) continue;
    if (lt.m.divides(t.m)) return static_cast<long>(i);
  }
  return -1;
}

Vec reduce_full(const PolyRing& ring, Vec f, const Reducers& red) {
  const auto& k = ring.field();
  Vec result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VTerm& t = f[pos];
    long r = red.find(t);
    if (r < 0) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = red[static_cast<std::size_t>(r)];
    Coeff c = k.div(t.c, g.front().c);
    Monomial m = t.m / g.front().m;
    f = sub_mul_tail(ring, f, pos, c, m, g);
    pos = 0;
  }
  return result;
}

Vec reduce_top(const PolyRing& ring, Vec f, const Reducers& red, std::uint32_t comp_limit) {
  const auto& k = ring.field();
  while (!f.empty() && f.front().comp < comp_limit) {
    long r = red.find(f.front());
    if (r < 0) return f;
    const Vec& g = red[static_cast<std::size_t>(r)];
    Coeff c = k.div(f.front().c, g.front().c);
    Monomial m = f.front().m / g.front().m;
    f = sub_mul_tail(ring, f, 0, c, m, g);
  }
  return f;
}

namespace {

struct Pair {
  VTerm lcm;  // coefficient unused
  std::size_t i, j;
};

class Engine {
 public:
  Engine(const PolyRing& ring, bool ideal_mode) : ring_(ring), ord_(ring.order()), ideal_mode_(ideal_mode) {}

  void add_input(Vec f) {
    f = reduce_top(ring_, std::move(f), active_reducers(), UINT32_MAX);
    if (f.empty()) return;
    insert(make_monic(ring_, std::move(f)));
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      Pair p = *it;
      pairs_.erase(it);
      Vec s = spoly(p.i, p.j);
      s = reduce_top(ring_, std::move(s), active_reducers(), UINT32_MAX);
      if (s.empty()) continue;
      insert(make_monic(ring_, std::move(s)));
    }
  }

  std::vector<Vec> reduced() {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) basis.push_back(polys_[i]);
    std::sort(basis.begin(), basis.end(),
              [&](const Vec& a, const Vec& b) { return compare_terms(ord_, a.front(), b.front()) > 0; });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<const Vec*> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(&basis[j]);
      Reducers red(std::move(others));
      VTerm lead = basis[i].front();
      Vec tail(basis[i].begin() + 1, basis[i].end());
      tail = reduce_full(ring_, std::move(tail), red);
      Vec full;
      full.reserve(tail.size() + 1);
      full.push_back(std::move(lead));
      for (auto& t : tail) full.push_back(std::move(t));
      basis[i] = std::move(full);
    }
    return basis;
  }

 private:
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      int c = compare_terms(*ord, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  const Reducers& active_reducers() {
    if (!reducers_valid_) {
      std::vector<const Vec*> act;
      for (std::size_t i = 0; i < polys_.size(); ++i)
        if (active_[i]) act.push_back(&polys_[i]);
      reducers_ = Reducers(std::move(act));
      reducers_valid_ = true;
    }
    return reducers_;
  }

  Vec spoly(std::size_t i, std::size_t j) const {
    const Vec& f = polys_[i];
    const Vec& g = polys_[j];
    Monomial l = lcm(f.front().m, g.front().m);
    Monomial mf = l / f.front().m;
    Monomial mg = l / g.front().m;
    Vec fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back(VTerm{t.m * mf, t.comp, t.c});
    return sub_mul_tail(ring_, fs, 0, Coeff{1}, mg, g);
  }

  bool coprime(std::size_t a, std::size_t b) const {
    return ideal_mode_ && polys_[a].front().m.coprime(polys_[b].front().m);
  }

  void insert(Vec h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const VTerm& lh = polys_[hi].front();

    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g] || polys_[g].front().comp != lh.comp) continue;
      cands.push_back(Cand{g, lcm(lh.m, polys_[g].front().m), coprime(hi, g)});
    }
    // Chain criterion among the new pairs: keep a pair unless another
    // surviving new pair has an lcm dividing its lcm.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      Cand& c = cands[a];
      if (c.coprime) {
        kept.push_back(c);
        c.alive = false;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b)
        if (cands[b].alive && cands[b].l.divides(c.l)) dominated = true;
      for (const auto& d : kept)
        if (!dominated && d.l.divides(c.l)) dominated = true;
      c.alive = false;
      if (!dominated) kept.push_back(c);
    }
    // Existing pairs made redundant by the new leading term.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (p.lcm.comp == lh.comp && lh.m.divides(p.lcm.m)) {
        Monomial li = lcm(polys_[p.i].front().m, lh.m);
        Monomial lj = lcm(polys_[p.j].front().m, lh.m);
        if (!(li == p.lcm.m) && !(lj == p.lcm.m)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : kept) {
      if (c.coprime) continue;
      pairs_.insert(Pair{VTerm{c.l, lh.comp, Coeff{}}, c.g, hi});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && polys_[g].front().comp == lh.comp && lh.m.divides(polys_[g].front().m)) active_[g] = false;
    active_[hi] = true;
    reducers_valid_ = false;
  }

  const PolyRing& ring_;
  const MonomialOrder& ord_;
  bool ideal_mode_;
  std::deque<Vec> polys_;  // stable addresses for the reducer index
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_{PairLess{&ord_}};
  bool reducers_valid_ = false;
  Reducers reducers_;
};

}  // namespace

std::vector<Vec> reduced_gb(const PolyRing& ring, std::vector<Vec> gens, bool ideal_mode) {
  for (auto& g : gens) g = sorted_vec(ring, std::move(g));
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Vec& v) { return v.empty(); }), gens.end());
  std::sort(gens.begin(), gens.end(),
            [&](const Vec& a, const Vec& b) { return compare_terms(ring.order(), a.front(), b.front()) < 0; });
  Engine e(ring, ideal_mode);
  for (auto& g : gens) e.add_input(std::move(g));
  e.run();
  return e.reduced();
}

}  // namespace ffr::detail
