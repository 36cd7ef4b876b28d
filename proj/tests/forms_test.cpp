#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "tlab/forms.hpp"
#include "tlab/indices.hpp"

using namespace tlab;
using namespace tlab::testing;

namespace {

Enumerator& shared_reps() {
  static Enumerator reps;
  return reps;
}

}  // namespace

TEST_CASE("form tags round trip") {
  for (FormId id : all_form_ids()) CHECK(parse_form_tag(form_tag(id)) == id);
  CHECK(form_tag(FormId::F22) == "F22");
  CHECK(form_tag(FormId::G0) == "G0");
  CHECK_THROWS_AS(parse_form_tag("F23"), BadForm);
  CHECK_THROWS_AS(parse_form_tag("e0"), BadForm);
}

TEST_CASE("parameter arithmetic round trips") {
  for (FormId id : all_form_ids()) {
    FormShape shape = form_shape(id);
    for (int n = shape.min_n; n <= shape.min_n + 3; ++n) {
      int v = form_vertices(id, n);
      auto back = form_parameter(id, v);
      REQUIRE(back.has_value());
      CHECK(*back == n);
      CHECK(static_cast<int>(default_form_slots(id, n).size()) ==
            form_param_size(id, n));
    }
    CHECK_FALSE(form_parameter(id, form_vertices(id, shape.min_n) + 1));
  }
}

TEST_CASE("build_form fixed instances") {
  Tournament one = Tournament::transitive(1);
  Tournament c3 = catalog("C3");

  // F3 at n = 1 is the 5-vertex sandwich around a 3-cycle
  FormInstance f3{FormId::F3, 1, one, {SlotKind::kC3}};
  CHECK(build_form(f3) ==
        lex_sum(Tournament::transitive(3), {one, c3, one}));

  // F1 at n = 1 collapses to the transitive tournament
  FormInstance f1{FormId::F1, 1, Tournament::transitive(2),
                  {SlotKind::kTwo, SlotKind::kTwo}};
  CHECK(is_isomorphic(build_form(f1), Tournament::transitive(5)));
  f1.dualized = true;
  CHECK(is_isomorphic(build_form(f1), Tournament::transitive(5)));

  // G0 at n = 2 has 4n = 8 vertices and is delta-maximal
  FormInstance g0{FormId::G0, 2, c3,
                  {SlotKind::kTwo, SlotKind::kTwo, SlotKind::kTwo}};
  Tournament t = build_form(g0);
  CHECK(t.n() == 8);
  CHECK(is_delta_maximal(t));

  // F5 at n = 1 reaches the order maximum at 6 vertices
  FormInstance f5{FormId::F5, 1, Tournament::transitive(2),
                  {SlotKind::kTwo, SlotKind::kTwo}};
  Tournament u = build_form(f5);
  CHECK(u.n() == 6);
  CHECK(small_delta(u) == 2);
  CHECK(is_delta_maximal(u));

  // F18 at n = 1 wraps one of the indecomposable 5-vertex tournaments
  for (const char* s5 : {"U5", "V5", "W5"}) {
    FormInstance f18{FormId::F18, 1, one, {SlotKind::kS5}, s5};
    Tournament w = build_form(f18);
    CHECK(w.n() == 7);
    CHECK(is_delta_maximal(w));
  }
}

TEST_CASE("build_form rejects malformed instances") {
  Tournament one = Tournament::transitive(1);
  CHECK_THROWS_AS(
      build_form(FormInstance{FormId::F3, 0, one, {SlotKind::kC3}}), BadForm);
  CHECK_THROWS_AS(
      build_form(FormInstance{FormId::F3, 1, Tournament::transitive(2),
                              {SlotKind::kC3, SlotKind::kTwo}}),
      BadForm);
  CHECK_THROWS_AS(
      build_form(FormInstance{FormId::F3, 1, one, {SlotKind::kTwo}}), BadForm);
  CHECK_THROWS_AS(
      build_form(FormInstance{FormId::F18, 1, one, {SlotKind::kS5}, "C3"}),
      BadForm);
  FormInstance no_dual{FormId::F3, 1, one, {SlotKind::kC3}};
  no_dual.dualized = true;
  CHECK_THROWS_AS(build_form(no_dual), BadForm);
}

TEST_CASE("generated class sizes at small orders") {
  Enumerator& reps = shared_reps();
  CHECK(generate_class(MaximalityClass::kBigDelta, 3, reps).size() == 1);
  CHECK(generate_class(MaximalityClass::kBigDelta, 4, reps).size() == 1);
  CHECK(generate_class(MaximalityClass::kSmallDelta, 5, reps).size() == 2);
  CHECK(generate_class(MaximalityClass::kSmallDelta, 8, reps).size() == 2);
  // inapplicable order for a single form
  CHECK(generate_form(FormId::F18, 6, reps).empty());
}

TEST_CASE("generated tournaments are maximal and closed under duality") {
  Enumerator& reps = shared_reps();
  for (int v = 3; v <= 9; ++v) {
    auto codes = generate_class(MaximalityClass::kBigDelta, v, reps);
    CHECK(!codes.empty());
    for (CanonicalCode c : codes) {
      Tournament t = decode(c);
      CHECK(big_delta(t).first == max_big_delta_of_order(v));
      CHECK(codes.count(canonical_code(t.dual())) == 1);
    }
  }
  for (int v = 5; v <= 9; ++v) {
    auto codes = generate_class(MaximalityClass::kSmallDelta, v, reps);
    CHECK(!codes.empty());
    for (CanonicalCode c : codes) {
      Tournament t = decode(c);
      CHECK(small_delta(t) == max_small_delta_of_order(v));
      CHECK(codes.count(canonical_code(t.dual())) == 1);
    }
  }
}

TEST_CASE("generation matches the maximal representatives exhaustively") {
  Enumerator& reps = shared_reps();
  for (int v = 3; v <= 6; ++v) {
    auto gen = generate_class(MaximalityClass::kBigDelta, v, reps);
    auto brute = reps.filter(v, "Delta_maximal");
    CHECK(std::vector<CanonicalCode>(gen.begin(), gen.end()) == brute);
  }
  for (int v = 5; v <= 6; ++v) {
    auto gen = generate_class(MaximalityClass::kSmallDelta, v, reps);
    auto brute = reps.filter(v, "delta_maximal");
    CHECK(std::vector<CanonicalCode>(gen.begin(), gen.end()) == brute);
  }
}

TEST_CASE("match_forms") {
  Enumerator& reps = shared_reps();
  Tournament one = Tournament::transitive(1);
  Tournament sandwich =
      lex_sum(Tournament::transitive(3), {one, catalog("C3"), one});
  std::set<FormId> got = match_forms(sandwich, reps);
  CHECK(got.count(FormId::F3) == 1);
  CHECK(got.count(FormId::T3) == 1);
  CHECK(match_forms(catalog("U5"), reps).empty());
  CHECK(match_forms(Tournament::transitive(5), reps) ==
        std::set<FormId>{FormId::T1, FormId::T2, FormId::F1, FormId::F2});
}

TEST_CASE("classify") {
  Enumerator& reps = shared_reps();
  ClassificationReport r = classify(Tournament::transitive(6), reps);
  CHECK(r.n == 6);
  CHECK(r.n_mod_4 == 2);
  CHECK(r.big_delta == 4);
  CHECK(r.small_delta == 2);
  CHECK(r.big_delta_maximal);
  CHECK(r.small_delta_maximal);
  CHECK(r.forms ==
        std::set<FormId>{FormId::E0, FormId::F4, FormId::F6, FormId::F8});

  ClassificationReport u = classify(catalog("U5"), reps);
  CHECK(u.big_delta == 0);
  CHECK(u.small_delta == 0);
  CHECK_FALSE(u.big_delta_maximal);
  CHECK_FALSE(u.small_delta_maximal);
  CHECK(u.forms.empty());

  CHECK_THROWS_AS(classify(catalog("C4"), shared_reps()), TooSmall);
}

TEST_CASE("generation size cap") {
  Enumerator& reps = shared_reps();
  CHECK_THROWS_AS(generate_class(MaximalityClass::kBigDelta, 11, reps),
                  TooLarge);
  CHECK_NOTHROW(generate_form(FormId::T1, 11, reps, kHardCanonCap));
  CHECK_THROWS_AS(generate_form(FormId::E0, 12, reps, 12), TooLarge);
}
