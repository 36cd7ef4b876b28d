#include "tlab/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tlab/indices.hpp"
#include "tlab/parallel.hpp"

namespace tlab {

namespace {

enum class Wrap { kNone, kC3, kTwo, kThree };

struct TemplateRow {
  MaximalityClass cls;
  Wrap wrap;
  bool has_dual;
  int min_n;
  int k_a, k_b;  // k = k_a * n + k_b
  int v_a, v_b;  // vertices = v_a * n + v_b
  std::vector<SlotKind> prefix;  // special slots in display order
};

using enum SlotKind;

const std::map<FormId, TemplateRow>& table() {
  static const std::map<FormId, TemplateRow> rows = {
      {FormId::E0, {MaximalityClass::kBigDelta, Wrap::kThree, false, 2, 1, -1, 2, 0, {}}},
      {FormId::T1, {MaximalityClass::kBigDelta, Wrap::kTwo, true, 1, 1, 0, 2, 1, {}}},
      {FormId::T2, {MaximalityClass::kBigDelta, Wrap::kThree, false, 1, 1, 0, 2, 1, {kOne}}},
      {FormId::T3, {MaximalityClass::kBigDelta, Wrap::kThree, false, 2, 1, -1, 2, 1, {kC3}}},
      {FormId::G0, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 2, 2, -1, 4, 0, {}}},
      {FormId::F1, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 0, 4, 1, {}}},
      {FormId::F2, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, 0, 4, 1, {kOne}}},
      {FormId::F3, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, -1, 4, 1, {kC3}}},
      {FormId::F4, {MaximalityClass::kSmallDelta, Wrap::kNone, false, 1, 2, 1, 4, 2, {}}},
      {FormId::F5, {MaximalityClass::kSmallDelta, Wrap::kC3, false, 1, 2, 0, 4, 2, {}}},
      {FormId::F6, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 1, 4, 2, {kOne}}},
      {FormId::F7, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 0, 4, 2, {kC3}}},
      {FormId::F8, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, 1, 4, 2, {kOne, kOne}}},
      {FormId::F9, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, 0, 4, 2, {kC3, kOne}}},
      {FormId::F10, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 2, 2, -1, 4, 2, {kC3, kC3}}},
      {FormId::F11, {MaximalityClass::kSmallDelta, Wrap::kNone, false, 1, 2, 2, 4, 3, {kOne}}},
      {FormId::F12, {MaximalityClass::kSmallDelta, Wrap::kNone, false, 1, 2, 1, 4, 3, {kC3}}},
      {FormId::F13, {MaximalityClass::kSmallDelta, Wrap::kC3, false, 1, 2, 0, 4, 3, {kC3}}},
      {FormId::F14, {MaximalityClass::kSmallDelta, Wrap::kC3, false, 1, 2, 1, 4, 3, {kOne}}},
      {FormId::F15, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 2, 4, 3, {kOne, kOne}}},
      {FormId::F16, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 1, 4, 3, {kC3, kOne}}},
      {FormId::F17, {MaximalityClass::kSmallDelta, Wrap::kTwo, true, 1, 2, 0, 4, 3, {kC3, kC3}}},
      {FormId::F18, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, -1, 4, 3, {kS5}}},
      {FormId::F19, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, 2, 4, 3, {kOne, kOne, kOne}}},
      {FormId::F20, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 2, 2, 0, 4, 3, {kC3, kC3, kOne}}},
      {FormId::F21, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 1, 2, 1, 4, 3, {kOne, kOne, kC3}}},
      {FormId::F22, {MaximalityClass::kSmallDelta, Wrap::kThree, false, 2, 2, -1, 4, 3, {kC3, kC3, kC3}}},
  };
  return rows;
}

Tournament slot_tournament(SlotKind kind, const std::string& s5) {
  switch (kind) {
    case kTwo: return Tournament::transitive(2);
    case kOne: return Tournament::transitive(1);
    case kC3: return catalog("C3");
    case kS5: return catalog(s5);
  }
  throw BadForm("BadForm: unknown slot kind");
}

Tournament wrap_tournament(Wrap wrap, const Tournament& inner) {
  Tournament one = Tournament::transitive(1);
  switch (wrap) {
    case Wrap::kNone: return inner;
    case Wrap::kC3: return lex_sum(catalog("C3"), {one, one, inner});
    case Wrap::kTwo: return lex_sum(Tournament::transitive(2), {one, inner});
    case Wrap::kThree:
      return lex_sum(Tournament::transitive(3), {one, inner, one});
  }
  throw BadForm("BadForm: unknown wrap");
}

// All slot vectors with the template's special multiset, over every choice
// of component positions.
std::vector<std::vector<SlotKind>> slot_assignments(const TemplateRow& row,
                                                    int k) {
  std::vector<std::vector<SlotKind>> out;
  std::vector<SlotKind> specials = row.prefix;
  std::vector<SlotKind> cur(k, kTwo);
  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int from) {
    if (s == specials.size()) {
      out.push_back(cur);
      return;
    }
    // Equal specials fill positions in increasing order to avoid repeats.
    bool same_as_prev = s > 0 && specials[s] == specials[s - 1];
    for (int pos = same_as_prev ? from : 0; pos < k; ++pos) {
      if (cur[pos] != kTwo) continue;
      cur[pos] = specials[s];
      rec(s + 1, pos + 1);
      cur[pos] = kTwo;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

FormShape form_shape(FormId id) {
  const TemplateRow& row = table().at(id);
  return FormShape{row.cls, row.has_dual, row.min_n};
}

int form_param_size(FormId id, int n) {
  const TemplateRow& row = table().at(id);
  if (n < row.min_n)
    throw BadForm("BadForm: " + form_tag(id) + " needs n >= " +
                  std::to_string(row.min_n));
  return row.k_a * n + row.k_b;
}

int form_vertices(FormId id, int n) {
  const TemplateRow& row = table().at(id);
  return row.v_a * n + row.v_b;
}

std::vector<SlotKind> default_form_slots(FormId id, int n) {
  const TemplateRow& row = table().at(id);
  std::vector<SlotKind> slots = row.prefix;
  slots.resize(form_param_size(id, n), kTwo);
  return slots;
}

std::string form_tag(FormId id) {
  switch (id) {
    case FormId::E0: return "E0";
    case FormId::T1: return "T1";
    case FormId::T2: return "T2";
    case FormId::T3: return "T3";
    case FormId::G0: return "G0";
    default:
      return "F" + std::to_string(static_cast<int>(id) -
                                  static_cast<int>(FormId::F1) + 1);
  }
}

FormId parse_form_tag(const std::string& tag) {
  for (FormId id : all_form_ids())
    if (form_tag(id) == tag) return id;
  throw BadForm("BadForm: unknown form tag " + tag);
}

std::vector<FormId> all_form_ids() {
  std::vector<FormId> out;
  for (const auto& [id, row] : table()) out.push_back(id);
  return out;
}

std::optional<int> form_parameter(FormId id, int vertices) {
  const TemplateRow& row = table().at(id);
  int num = vertices - row.v_b;
  if (num <= 0 || num % row.v_a != 0) return std::nullopt;
  int n = num / row.v_a;
  if (n < row.min_n) return std::nullopt;
  return n;
}

Tournament build_form(const FormInstance& inst) {
  const TemplateRow& row = table().at(inst.form);
  if (inst.n < row.min_n)
    throw BadForm("BadForm: " + form_tag(inst.form) + " needs n >= " +
                  std::to_string(row.min_n));
  int k = row.k_a * inst.n + row.k_b;
  if (inst.param.n() != k)
    throw BadForm("BadForm: " + form_tag(inst.form) + " at n = " +
                  std::to_string(inst.n) + " takes a " + std::to_string(k) +
                  "-vertex parameter, got " + std::to_string(inst.param.n()));
  if (static_cast<int>(inst.slots.size()) != k)
    throw BadForm("BadForm: slot list must have one entry per parameter "
                  "vertex");
  int ones = 0, c3s = 0, s5s = 0;
  for (SlotKind s : inst.slots) {
    if (s == kOne) ++ones;
    if (s == kC3) ++c3s;
    if (s == kS5) ++s5s;
  }
  int want_ones = 0, want_c3s = 0, want_s5s = 0;
  for (SlotKind s : row.prefix) {
    if (s == kOne) ++want_ones;
    if (s == kC3) ++want_c3s;
    if (s == kS5) ++want_s5s;
  }
  if (ones != want_ones || c3s != want_c3s || s5s != want_s5s)
    throw BadForm("BadForm: slot multiset does not match " +
                  form_tag(inst.form));
  if (s5s > 0 && inst.s5 != "U5" && inst.s5 != "V5" && inst.s5 != "W5")
    throw BadForm("BadForm: S5 must be U5, V5 or W5");
  if (inst.dualized && !row.has_dual)
    throw BadForm("BadForm: " + form_tag(inst.form) +
                  " has no dual variant");
  std::vector<Tournament> comps;
  comps.reserve(k);
  for (SlotKind s : inst.slots) comps.push_back(slot_tournament(s, inst.s5));
  Tournament t = wrap_tournament(row.wrap, lex_sum(inst.param, comps));
  return inst.dualized ? t.dual() : t;
}

std::set<CanonicalCode> generate_form(FormId id, int vertices,
                                      Enumerator& reps, int canon_cap) {
  const TemplateRow& row = table().at(id);
  std::set<CanonicalCode> out;
  auto n = form_parameter(id, vertices);
  if (!n) return out;
  if (vertices > std::min(canon_cap, kHardCanonCap))
    throw TooLarge("TooLarge: cannot canonicalize " +
                   std::to_string(vertices) + "-vertex instances");
  int k = row.k_a * *n + row.k_b;
  if (k > kEnumerationCap)
    throw TooLarge("TooLarge: form " + form_tag(id) + " at " +
                   std::to_string(vertices) + " vertices needs " +
                   std::to_string(k) + "-vertex parameters");
  std::vector<FormInstance> instances;
  for (const Tournament& param : reps.tournaments(k)) {
    for (const auto& slots : slot_assignments(row, k)) {
      bool uses_s5 =
          std::find(row.prefix.begin(), row.prefix.end(), kS5) !=
          row.prefix.end();
      std::vector<std::string> s5s =
          uses_s5 ? std::vector<std::string>{"U5", "V5", "W5"}
                  : std::vector<std::string>{"U5"};
      for (const std::string& s5 : s5s)
        for (int dual = 0; dual <= (row.has_dual ? 1 : 0); ++dual)
          instances.push_back(
              FormInstance{id, *n, param, slots, s5, dual == 1});
    }
  }
  std::vector<CanonicalCode> codes(instances.size());
  parallel_for(instances.size(), true, [&](std::size_t i) {
    codes[i] = canonical_code(build_form(instances[i]), canon_cap);
  });
  out.insert(codes.begin(), codes.end());
  return out;
}

std::set<CanonicalCode> generate_class(MaximalityClass cls, int vertices,
                                       Enumerator& reps, int canon_cap) {
  std::set<CanonicalCode> out;
  for (FormId id : all_form_ids()) {
    if (table().at(id).cls != cls) continue;
    auto codes = generate_form(id, vertices, reps, canon_cap);
    out.insert(codes.begin(), codes.end());
  }
  return out;
}

std::set<FormId> match_forms(const Tournament& t, Enumerator& reps,
                             int canon_cap) {
  CanonicalCode code = canonical_code(t, canon_cap);
  std::set<FormId> out;
  for (FormId id : all_form_ids()) {
    if (!form_parameter(id, t.n())) continue;
    if (generate_form(id, t.n(), reps, canon_cap).count(code)) out.insert(id);
  }
  return out;
}

ClassificationReport classify(const Tournament& t, Enumerator& reps) {
  if (t.n() < 5)
    throw TooSmall("TooSmall: classification needs 5 or more vertices");
  ClassificationReport report;
  report.n = t.n();
  report.n_mod_4 = t.n() % 4;
  report.big_delta = big_delta(t).first;
  report.small_delta = small_delta(t);
  report.big_delta_maximal = is_big_delta_maximal(t);
  report.small_delta_maximal = is_delta_maximal(t);
  report.forms = match_forms(t, reps);
  return report;
}

}  // namespace tlab
