#pragma once

// Independent test oracles. These deliberately take the dumbest correct
// route (full labeled exhaustion, permutation search, packing over every
// co-module) so they share no code path with the implementations they check.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "tlab/canonical.hpp"
#include "tlab/modular.hpp"
#include "tlab/tournament.hpp"

namespace tlab::testing {

inline Tournament from_pair_bits(int n, std::uint64_t bits) {
  std::vector<Arc> arcs;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((bits >> k) & 1)
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return Tournament::from_arcs(n, arcs);
}

// Canonical codes of every labeled tournament on n vertices, deduplicated.
inline std::vector<CanonicalCode> all_labeled_classes(int n) {
  int pairs = n * (n - 1) / 2;
  std::vector<CanonicalCode> codes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
    codes.push_back(canonical_code(from_pair_bits(n, bits)));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

// Isomorphism by exhaustive permutation search.
inline bool perm_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> perm(a.n());
  for (int i = 0; i < a.n(); ++i) perm[i] = i;
  do {
    bool match = true;
    for (int i = 0; match && i < a.n(); ++i)
      for (int j = 0; match && j < a.n(); ++j)
        if (i != j && a.arc(i, j) != b.arc(perm[i], perm[j])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Maximum disjoint packing over ALL co-modules, not just minimal ones.
inline int max_packing_all_comodules(const Tournament& t) {
  std::vector<VertexSet> cands;
  for (VertexSet m = 1; m < t.all_vertices(); ++m)
    if (is_comodule(t, m)) cands.push_back(m);
  int best = 0;
  std::function<void(std::size_t, VertexSet, int)> dfs =
      [&](std::size_t i, VertexSet used, int count) {
        best = std::max(best, count);
        for (std::size_t j = i; j < cands.size(); ++j)
          if (!(cands[j] & used)) dfs(j + 1, used | cands[j], count + 1);
      };
  dfs(0, 0, 0);
  return best;
}

inline Tournament random_tournament(int n, std::mt19937& rng) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1)
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return Tournament::from_arcs(n, arcs);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Tournament relabeled(const Tournament& t, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (auto [i, j] : t.arcs()) arcs.emplace_back(perm[i], perm[j]);
  return Tournament::from_arcs(t.n(), arcs);
}

}  // namespace tlab::testing
