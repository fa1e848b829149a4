#pragma once

#include <cstddef>
#include <vector>

namespace ffr {

// Strictly increasing 0-based indices.
using Subset = std::vector<int>;

// All k-subsets of {0..n-1} in colexicographic order (compare largest
// elements first). This is the one enumeration used for every basis of
// an exterior power, minor layout and Taylor basis in the library.
std::vector<Subset> subsets_colex(int n, int k);
// All subsets of {0..n-1}, by size then colex.
std::vector<Subset> all_subsets(int n);

// Position of a subset within subsets_colex(n, |s|).
std::size_t colex_rank(const Subset& s);

// (-1)^#{(i, j) in I x J : i > j}.
int shuffle_sign(const Subset& I, const Subset& J);

Subset complement(const Subset& s, int n);
Subset without(const Subset& s, int element);
// Sorted union; returns false if the sets meet.
bool disjoint_union(const Subset& a, const Subset& b, Subset& out);

}  // namespace ffr
