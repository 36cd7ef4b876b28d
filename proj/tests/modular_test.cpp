#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tlab/modular.hpp"

using namespace tlab;
using namespace tlab::testing;

TEST_CASE("modules of the transitive tournament are the intervals") {
  Tournament t5 = Tournament::transitive(5);
  CHECK(nontrivial_modules(t5).size() == 9);  // intervals of length 2..4
  CHECK(is_module(t5, make_set({1, 2, 3})));
  CHECK_FALSE(is_module(t5, make_set({1, 3})));
  CHECK(is_module(t5, 0));
  CHECK(is_module(t5, make_set({2})));
  CHECK(is_module(t5, t5.all_vertices()));

  CHECK(minimal_nontrivial_modules(t5) ==
        std::vector<VertexSet>{make_set({0, 1}), make_set({1, 2}),
                               make_set({2, 3}), make_set({3, 4})});
}

TEST_CASE("minimal co-modules of the transitive tournament") {
  // mc(n) = {{0}, {n-1}} plus the interior adjacent pairs
  Tournament t5 = Tournament::transitive(5);
  CHECK(minimal_comodules(t5) ==
        std::vector<VertexSet>{make_set({0}), make_set({4}), make_set({1, 2}),
                               make_set({2, 3})});

  Tournament t6 = Tournament::transitive(6);
  CHECK(minimal_comodules(t6) ==
        std::vector<VertexSet>{make_set({0}), make_set({5}), make_set({1, 2}),
                               make_set({2, 3}), make_set({3, 4})});
}

TEST_CASE("indecomposable catalog members") {
  for (const char* name : {"C3", "U5", "V5", "W5"}) {
    Tournament t = catalog(name);
    CHECK(is_indecomposable(t));
    CHECK(nontrivial_modules(t).empty());
    CHECK(minimal_comodules(t).empty());
  }
  CHECK_FALSE(is_indecomposable(Tournament::transitive(3)));
  CHECK_FALSE(is_indecomposable(catalog("C4")));
  CHECK(is_indecomposable(Tournament::transitive(1)));
  CHECK(is_indecomposable(Tournament::transitive(2)));
}

TEST_CASE("co-modules of C4") {
  Tournament c4 = catalog("C4");
  CHECK(is_comodule(c4, make_set({2, 3})));  // a module itself
  CHECK(is_comodule(c4, make_set({0, 1})));  // complement is a module
  CHECK_FALSE(is_comodule(c4, make_set({0})));
  CHECK(minimal_comodules(c4) ==
        std::vector<VertexSet>{make_set({0, 1}), make_set({2, 3})});
}

TEST_CASE("module structure is preserved under duality") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 25; ++rep) {
    Tournament t = random_tournament(7, rng);
    CHECK(nontrivial_modules(t) == nontrivial_modules(t.dual()));
    CHECK(minimal_comodules(t) == minimal_comodules(t.dual()));
  }
}

TEST_CASE("minimality and containment properties") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 25; ++rep) {
    Tournament t = random_tournament(7, rng);
    auto report = module_report(t);
    CHECK(report.nontrivial_modules == nontrivial_modules(t));

    // every co-module contains a minimal one
    for (VertexSet c : report.comodules) {
      bool covered = false;
      for (VertexSet m : report.minimal_comodules)
        if ((m & c) == m) covered = true;
      CHECK(covered);
    }
    // minimal co-modules form an antichain
    for (VertexSet a : report.minimal_comodules)
      for (VertexSet b : report.minimal_comodules)
        if (a != b) CHECK((a & b) != a);

    CHECK(is_indecomposable(t) == report.nontrivial_modules.empty());
    CHECK(is_indecomposable(t) == report.minimal_comodules.empty());
  }
}
