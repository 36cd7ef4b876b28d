#pragma once

#include <vector>

#include "tlab/tournament.hpp"

namespace tlab {

// Subset-scan cap: module enumeration walks all 2^n subsets.
inline constexpr int kSubsetScanCap = 22;

// True iff every vertex outside m relates uniformly to all of m.
// Trivial sets (empty, singletons, everything) are modules.
bool is_module(const Tournament& t, VertexSet m);

// All modules M with 2 <= |M| <= n-1, sorted by (size, bitmask).
std::vector<VertexSet> nontrivial_modules(const Tournament& t);

bool is_indecomposable(const Tournament& t);

// m or its complement is a nontrivial module.
bool is_comodule(const Tournament& t, VertexSet m);

// Inclusion-minimal co-modules, sorted by (size, bitmask).
std::vector<VertexSet> minimal_comodules(const Tournament& t);

// Inclusion-minimal nontrivial modules, sorted by (size, bitmask).
std::vector<VertexSet> minimal_nontrivial_modules(const Tournament& t);

struct ModuleReport {
  std::vector<VertexSet> nontrivial_modules;
  std::vector<VertexSet> minimal_nontrivial_modules;
  std::vector<VertexSet> comodules;
  std::vector<VertexSet> minimal_comodules;
};

ModuleReport module_report(const Tournament& t);

}  // namespace tlab
