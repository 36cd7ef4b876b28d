#include "tlab/indices.hpp"

#include <functional>

#include "tlab/modular.hpp"

namespace tlab {

namespace {

void require_at_least_five(const Tournament& t) {
  if (t.n() < 5)
    throw TooSmall("TooSmall: delta is defined for 5 or more vertices, got " +
                   std::to_string(t.n()));
}

// Visit all size-m subsets of arcs; stop when the visitor returns true.
bool for_each_arc_subset(const std::vector<Arc>& arcs, int m,
                         const std::function<bool(const std::vector<Arc>&)>& fn) {
  std::vector<Arc> chosen(m);
  std::function<bool(int, int)> rec = [&](int start, int depth) {
    if (depth == m) return fn(chosen);
    for (int i = start; i <= static_cast<int>(arcs.size()) - (m - depth); ++i) {
      chosen[depth] = arcs[i];
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

int max_big_delta_of_order(int n) {
  if (n < 3) throw TooSmall("Delta(n) is defined for n >= 3");
  return (n + 2) / 2;  // ceil((n+1)/2)
}

int max_small_delta_of_order(int n) {
  if (n < 5) throw TooSmall("delta(n) is defined for n >= 5");
  return (n + 4) / 4;  // ceil((n+1)/4)
}

std::pair<int, CoModularDecomposition> big_delta(const Tournament& t) {
  // Every co-module contains a minimal one and disjointness survives
  // shrinking, so packing minimal co-modules attains the true maximum.
  std::vector<VertexSet> cands = minimal_comodules(t);
  int m = static_cast<int>(cands.size());
  std::vector<int> cur, best;
  // Index-ordered DFS enumerates packings in lexicographic order of the
  // (size, bitmask)-sorted candidate list, so the first maximum found is
  // the lexicographically least one.
  std::function<void(int, VertexSet)> dfs = [&](int i, VertexSet used) {
    if (static_cast<int>(cur.size()) > static_cast<int>(best.size()))
      best = cur;
    if (i == m) return;
    if (static_cast<int>(cur.size()) + (m - i) <=
        static_cast<int>(best.size()))
      return;
    for (int j = i; j < m; ++j) {
      if (cands[j] & used) continue;
      cur.push_back(j);
      dfs(j + 1, used | cands[j]);
      cur.pop_back();
    }
  };
  dfs(0, 0);
  CoModularDecomposition d;
  for (int j : best) d.blocks.push_back(cands[j]);
  return {static_cast<int>(d.blocks.size()), d};
}

int small_delta(const Tournament& t) {
  require_at_least_five(t);
  int delta = big_delta(t).first;
  return (delta + 1) / 2;  // ceil(Delta/2)
}

OracleResult small_delta_oracle(const Tournament& t, int budget) {
  require_at_least_five(t);
  std::vector<Arc> arcs = t.arcs();
  for (int m = 0; m <= budget; ++m) {
    OracleResult result;
    bool found = for_each_arc_subset(arcs, m, [&](const std::vector<Arc>& b) {
      if (!is_indecomposable(t.reverse_arcs(b))) return false;
      result = OracleResult{m, b};
      return true;
    });
    if (found) return result;
  }
  throw BudgetExceeded("BudgetExceeded: no reversal set of size <= " +
                       std::to_string(budget));
}

std::vector<Arc> delta_witness(const Tournament& t) {
  int m = small_delta(t);
  std::vector<Arc> arcs = t.arcs();
  std::vector<Arc> witness;
  bool found = for_each_arc_subset(arcs, m, [&](const std::vector<Arc>& b) {
    if (!is_indecomposable(t.reverse_arcs(b))) return false;
    witness = b;
    return true;
  });
  if (!found)
    throw Error("internal: no witness of the formula size exists");
  return witness;
}

bool is_delta_maximal(const Tournament& t) {
  return small_delta(t) == max_small_delta_of_order(t.n());
}

bool is_big_delta_maximal(const Tournament& t) {
  if (t.n() < 3)
    throw TooSmall("Delta-maximality is defined for 3 or more vertices");
  return big_delta(t).first == max_big_delta_of_order(t.n());
}

IndexReport index_report(const Tournament& t) {
  IndexReport report;
  auto [delta, decomposition] = big_delta(t);
  report.big_delta = delta;
  report.decomposition = std::move(decomposition);
  if (t.n() >= 5) {
    report.small_delta = small_delta(t);
    report.witness_arcs = delta_witness(t);
  }
  return report;
}

}  // namespace tlab
