#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlab/errors.hpp"

namespace tlab {

// Hard cap on vertex count; module enumeration scans all 2^n subsets.
inline constexpr int kMaxVertices = 22;

// Subset of {0..n-1} as a bitmask over an ambient tournament.
using VertexSet = std::uint32_t;

using Arc = std::pair<int, int>;

inline int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_members(VertexSet s);
VertexSet make_set(const std::vector<int>& members);

// A tournament on vertices 0..n-1: every unordered pair carries exactly one
// orientation. Immutable value type; rows are out-neighbour bitmasks.
class Tournament {
 public:
  // Validates pair coverage: every pair oriented exactly once, no loops,
  // labels in range.
  static Tournament from_arcs(int n, const std::vector<Arc>& arcs);

  // Rows of an already-valid orientation matrix (internal fast path;
  // validated with assertions only).
  static Tournament from_rows(int n, const std::uint32_t* rows);

  static Tournament transitive(int n);

  int n() const { return n_; }
  bool arc(int i, int j) const { return (out_[i] >> j) & 1u; }
  std::uint32_t out_mask(int i) const { return out_[i]; }
  VertexSet all_vertices() const { return (n_ == 32) ? ~0u : ((1u << n_) - 1); }

  // All arcs in lexicographic (i,j) order.
  std::vector<Arc> arcs() const;

  Tournament dual() const;

  // Reverse exactly the arcs of B (a subset of A(T); duplicates collapse).
  Tournament reverse_arcs(const std::vector<Arc>& b) const;

  // Induced subtournament on X, relabelled 0..|X|-1 preserving label order.
  Tournament induced(VertexSet x) const;

  bool operator==(const Tournament& other) const;

 private:
  Tournament() = default;

  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> out_{};
};

// Named small tournaments: "transitive(n)", "C3", "C4", "U5", "V5", "W5".
Tournament catalog(const std::string& name);

// Lexicographic sum: substitute components[i] for vertex i of outer.
Tournament lex_sum(const Tournament& outer,
                   const std::vector<Tournament>& components);

// Lexicographic product outer.h: every component a copy of h.
Tournament lex_product(const Tournament& outer, const Tournament& h);

}  // namespace tlab
