#pragma once

#include <optional>
#include <vector>

#include "tlab/tournament.hpp"

namespace tlab {

// Pairwise disjoint co-modules of an ambient tournament, sorted by
// (size, bitmask).
struct CoModularDecomposition {
  std::vector<VertexSet> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
};

// Formula maxima over n-vertex tournaments.
int max_big_delta_of_order(int n);    // ceil((n+1)/2), n >= 3
int max_small_delta_of_order(int n);  // ceil((n+1)/4), n >= 5

// Co-modular index: exact maximum number of pairwise disjoint co-modules,
// together with one maximum decomposition whose blocks are all minimal
// co-modules. Among maximum packings the (size, bitmask)-sorted block
// sequence is lexicographically least.
std::pair<int, CoModularDecomposition> big_delta(const Tournament& t);

// Decomposability index via the Delta formula; requires n >= 5.
int small_delta(const Tournament& t);

struct OracleResult {
  int delta = 0;
  std::vector<Arc> witness;
};

// Independent brute-force decomposability index: smallest |B| with
// Inv(T,B) indecomposable, by iterating subset sizes 0,1,2,...
OracleResult small_delta_oracle(const Tournament& t, int budget = 4);

// A witness arc set of size small_delta(t) whose reversal is indecomposable.
std::vector<Arc> delta_witness(const Tournament& t);

bool is_delta_maximal(const Tournament& t);
bool is_big_delta_maximal(const Tournament& t);

struct IndexReport {
  int big_delta = 0;
  std::optional<int> small_delta;  // present iff n >= 5
  CoModularDecomposition decomposition;
  std::optional<std::vector<Arc>> witness_arcs;
};

IndexReport index_report(const Tournament& t);

}  // namespace tlab
