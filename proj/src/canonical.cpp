#include "tlab/canonical.hpp"

#include <algorithm>
#include <array>

#include "tlab/codec.hpp"

namespace tlab {

namespace {

// Minimum-code search over relabelings. Labels are assigned in increasing
// order; placing label d fixes the bits of pairs (a,d), a < d. Undetermined
// bits are zero, so a partial code already above the incumbent can never
// improve and the branch dies on a single integer compare.
struct CanonSearch {
  const Tournament& t;
  int n;
  std::uint64_t best = ~0ull;
  std::array<std::array<std::uint64_t, kHardCanonCap>, kHardCanonCap> posbit{};
  std::array<int, kHardCanonCap> perm{};
  std::array<int, kHardCanonCap> order{};
  std::uint32_t used = 0;

  explicit CanonSearch(const Tournament& tt) : t(tt), n(tt.n()) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int k = i * n - i * (i + 1) / 2 + (j - i - 1);
        posbit[i][j] = 1ull << (63 - k);
      }
    // Low out-degree first: a good first descent keeps the incumbent tight.
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.begin() + n, [&](int a, int b) {
      return set_size(t.out_mask(a)) < set_size(t.out_mask(b));
    });
  }

  void rec(int d, std::uint64_t partial) {
    if (d == n) {
      best = partial;
      return;
    }
    for (int idx = 0; idx < n; ++idx) {
      int v = order[idx];
      if (used & (1u << v)) continue;
      std::uint64_t np = partial;
      for (int a = 0; a < d; ++a)
        if (t.arc(perm[a], v)) np |= posbit[a][d];
      if (np > best) continue;
      perm[d] = v;
      used |= 1u << v;
      rec(d + 1, np);
      used &= ~(1u << v);
    }
  }
};

}  // namespace

std::string CanonicalCode::str() const {
  int pairs = n * (n - 1) / 2;
  int nbytes = (pairs + 7) / 8;
  std::string out = "T" + std::to_string(static_cast<int>(n)) + ":";
  static const char* hex = "0123456789ABCDEF";
  for (int b = 0; b < nbytes; ++b) {
    auto byte = static_cast<std::uint8_t>(bits >> (56 - 8 * b));
    out += hex[byte >> 4];
    out += hex[byte & 0xF];
  }
  return out;
}

CanonicalCode canonical_code(const Tournament& t, int cap) {
  if (cap > kHardCanonCap) cap = kHardCanonCap;
  if (t.n() > cap)
    throw TooLarge("TooLarge: canonicalization capped at " +
                   std::to_string(cap) + " vertices, got " +
                   std::to_string(t.n()));
  CanonSearch search(t);
  search.rec(0, 0);
  return CanonicalCode{static_cast<std::uint8_t>(t.n()), search.best};
}

Tournament decode(const CanonicalCode& code) {
  int n = code.n;
  std::uint32_t rows[kMaxVertices] = {};
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((code.bits >> (63 - k)) & 1)
        rows[i] |= 1u << j;
      else
        rows[j] |= 1u << i;
    }
  return Tournament::from_rows(n, rows);
}

CanonicalCode parse_canonical(const std::string& compact) {
  Tournament t = decode_compact(compact);
  if (t.n() > kHardCanonCap)
    throw TooLarge("TooLarge: code exceeds canonicalization range: " + compact);
  CanonicalCode code{static_cast<std::uint8_t>(t.n()), 0};
  int k = 0;
  for (int i = 0; i < t.n(); ++i)
    for (int j = i + 1; j < t.n(); ++j, ++k)
      if (t.arc(i, j)) code.bits |= 1ull << (63 - k);
  return code;
}

bool is_isomorphic(const Tournament& a, const Tournament& b, int cap) {
  if (a.n() != b.n()) return false;
  return canonical_code(a, cap) == canonical_code(b, cap);
}

}  // namespace tlab
