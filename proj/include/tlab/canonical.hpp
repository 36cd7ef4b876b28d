#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "tlab/tournament.hpp"

namespace tlab {

// Default canonicalization cap; the search is a pruned minimum over all n!
// relabelings. An explicit cap up to kHardCanonCap widens it for callers that
// accept the cost; beyond that the 64-bit code runs out of pair bits.
inline constexpr int kDefaultCanonCap = 10;
inline constexpr int kHardCanonCap = 11;

// Relabeling-invariant identifier of an isomorphism class: the
// lexicographically minimum compact encoding over all relabelings.
// Pair k of the upper triangle sits at bit (63 - k), so integer order
// matches byte order of the encoding.
struct CanonicalCode {
  std::uint8_t n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;

  // Compact-code string "T<n>:<HEX>" of the canonical representative.
  std::string str() const;
};

CanonicalCode canonical_code(const Tournament& t, int cap = kDefaultCanonCap);

// Decode a canonical code back into its representative tournament.
Tournament decode(const CanonicalCode& code);

CanonicalCode parse_canonical(const std::string& compact);

bool is_isomorphic(const Tournament& a, const Tournament& b,
                   int cap = kDefaultCanonCap);

}  // namespace tlab
