#include "tlab/modular.hpp"

#include <algorithm>

namespace tlab {

namespace {

void check_cap(const Tournament& t) {
  if (t.n() > kSubsetScanCap)
    throw TooLarge("TooLarge: subset scan capped at " +
                   std::to_string(kSubsetScanCap) + " vertices, got " +
                   std::to_string(t.n()));
}

void sort_sets(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int sa = set_size(a), sb = set_size(b);
    return sa != sb ? sa < sb : a < b;
  });
}

std::vector<VertexSet> minimal_of(std::vector<VertexSet> sets) {
  std::vector<VertexSet> out;
  for (VertexSet m : sets) {
    bool minimal = true;
    for (VertexSet other : sets)
      if (other != m && (other & ~m) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  sort_sets(out);
  return out;
}

// All co-modules, unsorted and possibly with duplicates collapsed.
std::vector<VertexSet> all_comodules(const Tournament& t) {
  VertexSet all = t.all_vertices();
  std::vector<VertexSet> out;
  for (VertexSet m : nontrivial_modules(t)) {
    out.push_back(m);
    out.push_back(all & ~m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_module(const Tournament& t, VertexSet m) {
  VertexSet outside = t.all_vertices() & ~m;
  while (outside) {
    int v = std::countr_zero(outside);
    outside &= outside - 1;
    VertexSet hits = t.out_mask(v) & m;
    if (hits != 0 && hits != m) return false;
  }
  return true;
}

std::vector<VertexSet> nontrivial_modules(const Tournament& t) {
  check_cap(t);
  int n = t.n();
  std::vector<VertexSet> out;
  VertexSet all = t.all_vertices();
  for (VertexSet m = 3; m < all; ++m) {
    int size = set_size(m);
    if (size < 2 || size > n - 1) continue;
    if (is_module(t, m)) out.push_back(m);
  }
  sort_sets(out);
  return out;
}

bool is_indecomposable(const Tournament& t) {
  check_cap(t);
  int n = t.n();
  VertexSet all = t.all_vertices();
  for (VertexSet m = 3; m < all; ++m) {
    int size = set_size(m);
    if (size < 2 || size > n - 1) continue;
    if (is_module(t, m)) return false;
  }
  return true;
}

bool is_comodule(const Tournament& t, VertexSet m) {
  VertexSet all = t.all_vertices();
  VertexSet comp = all & ~m;
  auto nontrivial = [&](VertexSet s) {
    int size = set_size(s);
    return size >= 2 && size <= t.n() - 1 && is_module(t, s);
  };
  return nontrivial(m) || nontrivial(comp);
}

std::vector<VertexSet> minimal_comodules(const Tournament& t) {
  return minimal_of(all_comodules(t));
}

std::vector<VertexSet> minimal_nontrivial_modules(const Tournament& t) {
  return minimal_of(nontrivial_modules(t));
}

ModuleReport module_report(const Tournament& t) {
  ModuleReport report;
  report.nontrivial_modules = nontrivial_modules(t);
  report.minimal_nontrivial_modules = minimal_of(report.nontrivial_modules);
  report.comodules = all_comodules(t);
  sort_sets(report.comodules);
  report.minimal_comodules = minimal_comodules(t);
  return report;
}

}  // namespace tlab
