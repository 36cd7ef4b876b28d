#include "tlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "tlab/forms.hpp"
#include "tlab/indices.hpp"
#include "tlab/modular.hpp"
#include "tlab/parallel.hpp"

namespace tlab {

namespace {

constexpr std::size_t kCounterexampleCap = 10;

struct Collector {
  long total = 0;
  std::vector<Counterexample> kept;

  void add(const std::string& code, const std::string& details) {
    ++total;
    if (kept.size() < kCounterexampleCap) kept.push_back({code, details});
  }
};

// Per-representative verdict function: empty string means pass.
using RepCheck = std::function<std::string(const Tournament&)>;

// Whole-order check appending counterexamples directly.
using OrderCheck = std::function<long(int, Enumerator&, bool, Collector&)>;

long sweep(int n, Enumerator& reps, bool parallel, Collector& out,
           const RepCheck& check) {
  std::vector<Tournament> ts = reps.tournaments(n);
  std::vector<std::string> verdicts(ts.size());
  parallel_for(ts.size(), parallel, [&](std::size_t i) {
    try {
      verdicts[i] = check(ts[i]);
    } catch (const std::exception& e) {
      verdicts[i] = std::string("exception: ") + e.what();
    }
  });
  const auto& codes = reps.representatives(n);
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (!verdicts[i].empty()) out.add(codes[i].str(), verdicts[i]);
  return static_cast<long>(ts.size());
}

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int v : set_members(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// --- per-representative checks ------------------------------------------

std::string check_lemma_3_1(const Tournament& t) {
  int singleton_comodules = 0;
  for (int v = 0; v < t.n(); ++v)
    if (is_comodule(t, 1u << v)) ++singleton_comodules;
  if (singleton_comodules > 2)
    return std::to_string(singleton_comodules) +
           " singleton co-modules, expected at most 2";
  auto [delta, d] = big_delta(t);
  (void)delta;
  auto nontrivial = [&](VertexSet m) {
    int size = set_size(m);
    return size >= 2 && size <= t.n() - 1 && is_module(t, m);
  };
  for (VertexSet m : d.blocks) {
    if (is_module(t, m)) continue;
    for (VertexSet other : d.blocks)
      if (other != m && !nontrivial(other))
        return "block " + set_string(other) +
               " not a nontrivial module although " + set_string(m) +
               " is a non-module block";
  }
  return {};
}

std::string check_cor_3_2(const Tournament& t) {
  auto [delta, d] = big_delta(t);
  (void)delta;
  int singletons = 0;
  for (VertexSet m : d.blocks)
    if (set_size(m) == 1) ++singletons;
  if (singletons > 2)
    return "delta-decomposition has " + std::to_string(singletons) +
           " singletons";
  if (singletons > 0) {
    for (VertexSet m : d.blocks) {
      int size = set_size(m);
      if (size >= 2 && !(size <= t.n() - 1 && is_module(t, m)))
        return "sg(D) nonempty but block " + set_string(m) +
               " is not a nontrivial module";
    }
  }
  return {};
}

std::string check_rem_3_3(const Tournament& t) {
  auto mc = minimal_comodules(t);
  auto min_mods = minimal_nontrivial_modules(t);
  for (VertexSet m : mc) {
    int size = set_size(m);
    bool nontrivial_module = size >= 2 && size <= t.n() - 1 && is_module(t, m);
    if (!nontrivial_module) continue;
    if (std::find(min_mods.begin(), min_mods.end(), m) == min_mods.end())
      return set_string(m) + " is a minimal co-module and nontrivial module "
             "but not a minimal nontrivial module";
    if (!is_indecomposable(t.induced(m)))
      return "T[" + set_string(m) + "] is decomposable";
  }
  return {};
}

std::string check_obs_3_4(const Tournament& t) {
  static const Tournament c3 = catalog("C3");
  static const std::vector<Tournament> indec5 = {catalog("U5"), catalog("V5"),
                                                 catalog("W5")};
  for (VertexSet m : minimal_comodules(t)) {
    int size = set_size(m);
    bool nontrivial_module = size >= 2 && size <= t.n() - 1 && is_module(t, m);
    if (size == 3 && !is_isomorphic(t.induced(m), c3))
      return "T[" + set_string(m) + "] is a 3-set minimal co-module not "
             "isomorphic to C3";
    if (nontrivial_module && size == 4)
      return set_string(m) + " is a 4-element minimal co-module module";
    if (nontrivial_module && size == 5) {
      Tournament sub = t.induced(m);
      bool ok = false;
      for (const Tournament& s : indec5) ok = ok || is_isomorphic(sub, s);
      if (!ok)
        return "T[" + set_string(m) + "] is not U5, V5 or W5";
    }
  }
  return {};
}

std::string check_formula(const Tournament& t) {
  int via_formula = small_delta(t);
  int budget = max_small_delta_of_order(t.n());
  int via_oracle = small_delta_oracle(t, budget).delta;
  if (via_formula != via_oracle)
    return "formula gives " + std::to_string(via_formula) + ", oracle " +
           std::to_string(via_oracle);
  return {};
}

std::string check_cor_3_6(const Tournament& t) {
  int n = t.n();
  bool d_max = small_delta(t) == max_small_delta_of_order(n);
  int delta = big_delta(t).first;
  int delta_n = max_big_delta_of_order(n);
  bool rhs = (n % 4 == 0 || n % 4 == 1)
                 ? delta == delta_n
                 : (delta == delta_n || delta == delta_n - 1);
  if (d_max != rhs)
    return "delta-maximal=" + std::to_string(d_max) + " but Delta=" +
           std::to_string(delta) + ", Delta(n)=" + std::to_string(delta_n);
  return {};
}

// --- whole-order checks --------------------------------------------------

void diff_sets(const std::set<CanonicalCode>& brute,
               const std::set<CanonicalCode>& generated, Collector& out) {
  for (const CanonicalCode& c : brute)
    if (!generated.count(c)) out.add(c.str(), "reached the maximum but no form generates it");
  for (const CanonicalCode& c : generated)
    if (!brute.count(c)) out.add(c.str(), "generated by a form but not maximal");
}

long check_delta_max_classes(int n, Enumerator& reps, bool parallel,
                             Collector& out) {
  std::vector<Tournament> ts = reps.tournaments(n);
  const auto& codes = reps.representatives(n);
  int target = max_small_delta_of_order(n);
  std::vector<char> maximal(ts.size(), 0);
  parallel_for(ts.size(), parallel, [&](std::size_t i) {
    maximal[i] = small_delta_oracle(ts[i], target).delta == target ? 1 : 0;
  });
  std::set<CanonicalCode> brute;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (maximal[i]) brute.insert(codes[i]);
  diff_sets(brute, generate_class(MaximalityClass::kSmallDelta, n, reps), out);
  return static_cast<long>(ts.size());
}

long check_big_delta_max_classes(int n, Enumerator& reps, bool parallel,
                                 Collector& out) {
  std::vector<Tournament> ts = reps.tournaments(n);
  const auto& codes = reps.representatives(n);
  int target = max_big_delta_of_order(n);
  std::vector<char> maximal(ts.size(), 0);
  parallel_for(ts.size(), parallel, [&](std::size_t i) {
    maximal[i] = big_delta(ts[i]).first == target ? 1 : 0;
  });
  std::set<CanonicalCode> brute;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (maximal[i]) brute.insert(codes[i]);
  diff_sets(brute, generate_class(MaximalityClass::kBigDelta, n, reps), out);
  return static_cast<long>(ts.size());
}

long check_deltan_max(int n, Enumerator& reps, bool parallel, Collector& out) {
  std::vector<Tournament> ts = reps.tournaments(n);
  std::vector<int> deltas(ts.size());
  parallel_for(ts.size(), parallel,
               [&](std::size_t i) { deltas[i] = big_delta(ts[i]).first; });
  int max_delta = *std::max_element(deltas.begin(), deltas.end());
  if (max_delta != max_big_delta_of_order(n))
    out.add("", "max Delta over " + std::to_string(n) + "-vertex classes is " +
                    std::to_string(max_delta) + ", formula says " +
                    std::to_string(max_big_delta_of_order(n)));
  if (n >= 5) {
    std::vector<int> small(ts.size());
    parallel_for(ts.size(), parallel,
                 [&](std::size_t i) { small[i] = small_delta(ts[i]); });
    int max_small = *std::max_element(small.begin(), small.end());
    if (max_small != max_small_delta_of_order(n))
      out.add("", "max delta over " + std::to_string(n) +
                      "-vertex classes is " + std::to_string(max_small) +
                      ", formula says " +
                      std::to_string(max_small_delta_of_order(n)));
  }
  return static_cast<long>(ts.size());
}

std::set<CanonicalCode> catalog_codes(
    const std::vector<Tournament>& tournaments) {
  std::set<CanonicalCode> out;
  for (const Tournament& t : tournaments) out.insert(canonical_code(t));
  return out;
}

long check_fact_4_1(int, Enumerator& reps, bool, Collector& out) {
  Tournament one = Tournament::transitive(1);
  Tournament c3 = catalog("C3");
  std::set<CanonicalCode> constructed = catalog_codes({
      Tournament::transitive(4),
      lex_sum(Tournament::transitive(2), {one, c3}),
      lex_sum(Tournament::transitive(2), {c3, one}),
      lex_sum(c3, {one, one, Tournament::transitive(2)}),
  });
  const auto& codes = reps.representatives(4);
  std::set<CanonicalCode> enumerated(codes.begin(), codes.end());
  diff_sets(enumerated, constructed, out);
  return 4;
}

long check_fact_4_2(int, Enumerator& reps, bool, Collector& out) {
  Tournament one = Tournament::transitive(1);
  Tournament two = Tournament::transitive(2);
  Tournament three = Tournament::transitive(3);
  Tournament c3 = catalog("C3");
  Tournament c4 = catalog("C4");
  std::set<CanonicalCode> constructed = catalog_codes({
      Tournament::transitive(5),
      lex_sum(three, {one, one, c3}),
      lex_sum(three, {c3, one, one}),
      lex_sum(three, {one, c3, one}),
      lex_sum(two, {one, c4}),
      lex_sum(two, {c4, one}),
      lex_sum(c3, {one, two, two}),
      lex_sum(c3, {one, one, c3}),
      lex_sum(c3, {one, one, three}),
      catalog("U5"),
      catalog("V5"),
      catalog("W5"),
  });
  const auto& codes = reps.representatives(5);
  std::set<CanonicalCode> enumerated(codes.begin(), codes.end());
  diff_sets(enumerated, constructed, out);
  return 12;
}

// --- registry ------------------------------------------------------------

struct CheckDef {
  std::function<bool(int)> applicable;
  RepCheck rep_check;      // either this ...
  OrderCheck order_check;  // ... or this
};

const std::vector<std::pair<std::string, CheckDef>>& registry() {
  auto rep = [](std::function<bool(int)> app, RepCheck fn) {
    return CheckDef{std::move(app), std::move(fn), nullptr};
  };
  auto order = [](std::function<bool(int)> app, OrderCheck fn) {
    return CheckDef{std::move(app), nullptr, std::move(fn)};
  };
  static const std::vector<std::pair<std::string, CheckDef>> defs = {
      {"fact-4.1", order([](int n) { return n == 4; }, check_fact_4_1)},
      {"fact-4.2", order([](int n) { return n == 5; }, check_fact_4_2)},
      {"lemma-3.1", rep([](int n) { return n >= 1; }, check_lemma_3_1)},
      {"cor-3.2", rep([](int n) { return n >= 1; }, check_cor_3_2)},
      {"rem-3.3", rep([](int n) { return n >= 1; }, check_rem_3_3)},
      {"obs-3.4", rep([](int n) { return n >= 1; }, check_obs_3_4)},
      {"thm-deltan-formula", rep([](int n) { return n >= 5; }, check_formula)},
      {"thm-deltan-max",
       order([](int n) { return n >= 3; }, check_deltan_max)},
      {"cor-3.6", rep([](int n) { return n >= 5; }, check_cor_3_6)},
      {"prop-5.1", order([](int n) { return n >= 4 && n % 2 == 0; },
                         check_big_delta_max_classes)},
      {"prop-5.2", order([](int n) { return n >= 3 && n % 2 == 1; },
                         check_big_delta_max_classes)},
      {"thm-6.1", order([](int n) { return n >= 8 && n % 4 == 0; },
                        check_delta_max_classes)},
      {"thm-6.2", order([](int n) { return n >= 5 && n % 4 == 1; },
                        check_delta_max_classes)},
      {"thm-6.3", order([](int n) { return n >= 6 && n % 4 == 2; },
                        check_delta_max_classes)},
      {"thm-6.4", order([](int n) { return n >= 7 && n % 4 == 3; },
                        check_delta_max_classes)},
  };
  return defs;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& [id, def] : registry()) out.push_back(id);
  return out;
}

VerificationReport run_check(const std::string& check_id, int n_lo, int n_hi,
                             Enumerator& reps, bool parallel) {
  const CheckDef* def = nullptr;
  for (const auto& [id, d] : registry())
    if (id == check_id) def = &d;
  if (!def) throw UnknownCheck("UnknownCheck: " + check_id);
  if (n_lo < 1 || n_hi < n_lo)
    throw Error("bad range " + std::to_string(n_lo) + ".." +
                std::to_string(n_hi));
  if (n_hi > kEnumerationCap)
    throw TooLarge("TooLarge: check range ends at " + std::to_string(n_hi) +
                   ", enumeration stops at " +
                   std::to_string(kEnumerationCap));
  VerificationReport report;
  report.check_id = check_id;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  auto start = std::chrono::steady_clock::now();
  Collector collector;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (!def->applicable(n)) continue;
    if (def->rep_check)
      report.instances_checked += sweep(n, reps, parallel, collector,
                                        def->rep_check);
    else
      report.instances_checked +=
          def->order_check(n, reps, parallel, collector);
  }
  report.total_counterexamples = collector.total;
  report.counterexamples = std::move(collector.kept);
  report.pass = report.total_counterexamples == 0;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace tlab
