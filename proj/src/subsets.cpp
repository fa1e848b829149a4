#include "ffr/subsets.hpp"

#include <algorithm>

namespace ffr {

namespace {

std::size_t binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<Subset> subsets_colex(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(s);
    // Colex successor: bump the first element that has room, reset the ones before it.
    int i = 0;
    while (i < k && (i + 1 < k ? s[i] + 1 == s[i + 1] : s[i] + 1 == n)) ++i;
    if (i == k) break;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (int k = 0; k <= n; ++k) {
    auto part = subsets_colex(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t colex_rank(const Subset& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binom(s[i], static_cast<int>(i) + 1);
  return r;
}

int shuffle_sign(const Subset& I, const Subset& J) {
  std::size_t inversions = 0;
  for (int i : I)
    for (int j : J)
      if (i > j) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Subset complement(const Subset& s, int n) {
  Subset out;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

Subset without(const Subset& s, int element) {
  Subset out;
  for (int i : s)
    if (i != element) out.push_back(i);
  return out;
}

bool disjoint_union(const Subset& a, const Subset& b, Subset& out) {
  out.clear();
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return std::adjacent_find(out.begin(), out.end()) == out.end();
}

}  // namespace ffr
