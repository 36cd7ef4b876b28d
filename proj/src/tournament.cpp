#include "tlab/tournament.hpp"

#include <cassert>
#include <regex>

namespace tlab {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(const std::vector<int>& members) {
  VertexSet s = 0;
  for (int v : members) s |= 1u << v;
  return s;
}

Tournament Tournament::from_arcs(int n, const std::vector<Arc>& arcs) {
  if (n < 1 || n > kMaxVertices)
    throw TooLarge("vertex count out of range: " + std::to_string(n));
  Tournament t;
  t.n_ = n;
  for (auto [i, j] : arcs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError("LabelOutOfRange: arc (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
    if (i == j) throw ParseError("LoopArc: (" + std::to_string(i) + "," +
                                 std::to_string(i) + ")");
    if (t.arc(j, i) || t.arc(i, j))
      throw ParseError("DuplicatePair: {" + std::to_string(i) + "," +
                       std::to_string(j) + "} oriented twice");
    t.out_[i] |= 1u << j;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!t.arc(i, j) && !t.arc(j, i))
        throw ParseError("MissingPair: {" + std::to_string(i) + "," +
                         std::to_string(j) + "} unoriented");
  return t;
}

Tournament Tournament::from_rows(int n, const std::uint32_t* rows) {
  assert(n >= 1 && n <= kMaxVertices);
  Tournament t;
  t.n_ = n;
  for (int i = 0; i < n; ++i) t.out_[i] = rows[i];
#ifndef NDEBUG
  for (int i = 0; i < n; ++i) {
    assert(!(rows[i] & (1u << i)));
    for (int j = i + 1; j < n; ++j) assert(t.arc(i, j) != t.arc(j, i));
  }
#endif
  return t;
}

Tournament Tournament::transitive(int n) {
  if (n < 1 || n > kMaxVertices)
    throw TooLarge("vertex count out of range: " + std::to_string(n));
  Tournament t;
  t.n_ = n;
  std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  for (int i = 0; i < n; ++i) t.out_[i] = all & ~((1u << (i + 1)) - 1);
  return t;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (arc(i, j)) out.emplace_back(i, j);
  return out;
}

Tournament Tournament::dual() const {
  Tournament t;
  t.n_ = n_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !arc(i, j)) t.out_[i] |= 1u << j;
  return t;
}

Tournament Tournament::reverse_arcs(const std::vector<Arc>& b) const {
  Tournament t = *this;
  std::array<std::uint32_t, kMaxVertices> seen{};
  for (auto [i, j] : b) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || !arc(i, j))
      throw ParseError("ArcNotPresent: (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
    if (seen[i] & (1u << j)) continue;
    seen[i] |= 1u << j;
    t.out_[i] &= ~(1u << j);
    t.out_[j] |= 1u << i;
  }
  return t;
}

Tournament Tournament::induced(VertexSet x) const {
  if (!x) throw ParseError("EmptySet: induced subtournament needs vertices");
  std::vector<int> verts = set_members(x);
  int m = static_cast<int>(verts.size());
  Tournament t;
  t.n_ = m;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && arc(verts[a], verts[b])) t.out_[a] |= 1u << b;
  return t;
}

bool Tournament::operator==(const Tournament& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (out_[i] != other.out_[i]) return false;
  return true;
}

Tournament catalog(const std::string& name) {
  static const std::regex transitive_re(R"(transitive\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, transitive_re)) {
    int n = std::stoi(m[1].str());
    if (n < 1 || n > kMaxVertices)
      throw TooLarge("transitive(" + m[1].str() + ") out of range");
    return Tournament::transitive(n);
  }
  if (name == "C3")
    return Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  if (name == "C4")
    return lex_sum(catalog("C3"), {Tournament::transitive(1),
                                   Tournament::transitive(1),
                                   Tournament::transitive(2)});
  if (name == "U5")
    return Tournament::from_arcs(
        5, {{0, 1}, {0, 2}, {1, 2},                                  // 3
            {3, 0}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {2, 4}, {3, 4}});
  if (name == "V5")
    return Tournament::from_arcs(
        5, {{0, 1}, {0, 2}, {1, 2},
            {3, 0}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {2, 4}, {4, 3}});
  if (name == "W5")
    return Tournament::from_arcs(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},          // 4
            {4, 0}, {4, 2}, {1, 4}, {3, 4}});
  throw UnknownName("UnknownName: " + name);
}

Tournament lex_sum(const Tournament& outer,
                   const std::vector<Tournament>& components) {
  int k = outer.n();
  if (static_cast<int>(components.size()) != k)
    throw ParseError("ArityMismatch: outer has " + std::to_string(k) +
                     " vertices, got " + std::to_string(components.size()) +
                     " components");
  int total = 0;
  std::vector<int> offset(k);
  for (int i = 0; i < k; ++i) {
    offset[i] = total;
    total += components[i].n();
  }
  if (total > kMaxVertices)
    throw TooLarge("lexicographic sum has " + std::to_string(total) +
                   " vertices");
  std::array<std::uint32_t, kMaxVertices> rows{};
  for (int i = 0; i < k; ++i) {
    const Tournament& ci = components[i];
    for (int a = 0; a < ci.n(); ++a) {
      std::uint32_t row = 0;
      for (int b = 0; b < ci.n(); ++b)
        if (ci.arc(a, b)) row |= 1u << (offset[i] + b);
      for (int j = 0; j < k; ++j)
        if (outer.arc(i, j))
          row |= ((1u << components[j].n()) - 1) << offset[j];
      rows[offset[i] + a] = row;
    }
  }
  return Tournament::from_rows(total, rows.data());
}

Tournament lex_product(const Tournament& outer, const Tournament& h) {
  return lex_sum(outer, std::vector<Tournament>(outer.n(), h));
}

}  // namespace tlab
