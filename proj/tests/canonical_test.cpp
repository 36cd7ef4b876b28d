#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tlab/canonical.hpp"
#include "tlab/codec.hpp"

using namespace tlab;
using namespace tlab::testing;

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937 rng(101);
  for (int n : {2, 3, 5, 7, 8}) {
    for (int rep = 0; rep < 15; ++rep) {
      Tournament t = random_tournament(n, rng);
      CanonicalCode code = canonical_code(t);
      Tournament shuffled = relabeled(t, random_permutation(n, rng));
      CHECK(canonical_code(shuffled) == code);
    }
  }
}

TEST_CASE("canonical representative decodes to its own code") {
  std::mt19937 rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    Tournament t = random_tournament(6, rng);
    CanonicalCode code = canonical_code(t);
    CHECK(canonical_code(decode(code)) == code);
    CHECK(parse_canonical(code.str()) == code);
    CHECK(encode_compact(decode(code)) == code.str());
  }
}

TEST_CASE("codes separate classes exactly on all 4-vertex tournaments") {
  // every pair of labeled 4-tournaments: equal codes iff permutation-isomorphic
  std::vector<Tournament> all;
  for (std::uint64_t bits = 0; bits < 64; ++bits)
    all.push_back(from_pair_bits(4, bits));
  for (const Tournament& a : all)
    for (const Tournament& b : all)
      CHECK((canonical_code(a) == canonical_code(b)) == perm_isomorphic(a, b));
}

TEST_CASE("distinct small classes get distinct codes") {
  Tournament one = Tournament::transitive(1);
  Tournament c3 = catalog("C3");
  CHECK(canonical_code(Tournament::transitive(3)) != canonical_code(c3));
  CHECK(canonical_code(lex_sum(Tournament::transitive(2), {one, c3})) !=
        canonical_code(lex_sum(Tournament::transitive(2), {c3, one})));
  CHECK(canonical_code(Tournament::transitive(4)) != canonical_code(catalog("C4")));
}

TEST_CASE("is_isomorphic") {
  Tournament c3 = catalog("C3");
  CHECK(is_isomorphic(c3, c3.dual()));
  CHECK(is_isomorphic(c3, c3));
  CHECK_FALSE(is_isomorphic(Tournament::transitive(4), catalog("C4")));
  CHECK_FALSE(is_isomorphic(c3, Tournament::transitive(4)));
}

TEST_CASE("canonicalization cap") {
  CHECK_THROWS_AS(canonical_code(Tournament::transitive(11)), TooLarge);
  CHECK_NOTHROW(canonical_code(Tournament::transitive(11), 11));
  CHECK_THROWS_AS(canonical_code(Tournament::transitive(12), 12), TooLarge);
}
