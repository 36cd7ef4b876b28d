#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tlab/canonical.hpp"
#include "tlab/enumeration.hpp"
#include "tlab/tournament.hpp"

namespace tlab {

// Stable identifiers for the classified shapes. E0 and T1..T3 are the
// Delta-maximal templates (even and odd order); G0 and F1..F22 the
// delta-maximal ones, grouped by order mod 4.
enum class FormId {
  E0, T1, T2, T3,
  G0,
  F1, F2, F3,
  F4, F5, F6, F7, F8, F9, F10,
  F11, F12, F13, F14, F15, F16, F17, F18, F19, F20, F21, F22,
};

enum class MaximalityClass { kBigDelta, kSmallDelta };

std::string form_tag(FormId id);
FormId parse_form_tag(const std::string& tag);
std::vector<FormId> all_form_ids();

// Per-component slot of the inner lexicographic sum.
enum class SlotKind { kTwo, kOne, kC3, kS5 };

// One concrete template instantiation. `param` is the T_k of the template
// (k components); `slots[i]` says what component vertex i of param receives.
// `s5` picks U5/V5/W5 for F18; `dualized` applies to the forms stated
// "or its dual".
struct FormInstance {
  FormId form = FormId::E0;
  int n = 1;  // the theorem's parameter, not the vertex count
  Tournament param = Tournament::transitive(1);
  std::vector<SlotKind> slots;
  std::string s5 = "U5";
  bool dualized = false;
};

struct FormShape {
  MaximalityClass cls;
  bool has_dual;
  int min_n;
};

FormShape form_shape(FormId id);

// Component count of the parameter tournament T_k at theorem parameter n.
int form_param_size(FormId id, int n);
// Total vertex count the instance produces.
int form_vertices(FormId id, int n);
// Specials at the template's display positions, padded with 2-slots.
std::vector<SlotKind> default_form_slots(FormId id, int n);

// The theorem parameter n such that the form covers `vertices`, if any.
std::optional<int> form_parameter(FormId id, int vertices);

Tournament build_form(const FormInstance& inst);

// Canonical codes of every instance of every form of the class at the given
// vertex count, over all parameter tournaments, slot assignments, duals and
// S5 choices. `canon_cap` may be raised to kHardCanonCap for large sweeps.
std::set<CanonicalCode> generate_class(MaximalityClass cls, int vertices,
                                       Enumerator& reps,
                                       int canon_cap = kDefaultCanonCap);

// Codes of a single form at the given vertex count (empty if inapplicable).
std::set<CanonicalCode> generate_form(FormId id, int vertices,
                                      Enumerator& reps,
                                      int canon_cap = kDefaultCanonCap);

// All forms (of either class) with an instance isomorphic to t.
std::set<FormId> match_forms(const Tournament& t, Enumerator& reps,
                             int canon_cap = kDefaultCanonCap);

struct ClassificationReport {
  int n = 0;
  int n_mod_4 = 0;
  int big_delta = 0;
  int small_delta = 0;
  bool big_delta_maximal = false;
  bool small_delta_maximal = false;
  std::set<FormId> forms;
};

ClassificationReport classify(const Tournament& t, Enumerator& reps);

}  // namespace tlab
