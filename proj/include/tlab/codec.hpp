#pragma once

#include <string>

#include "tlab/tournament.hpp"

namespace tlab {

// Compact code "T<n>:<HEX>": upper-triangle bits in lexicographic (i,j)
// order, packed MSB-first into bytes, zero-padded, uppercase hex.
std::string encode_compact(const Tournament& t);
Tournament decode_compact(const std::string& code);

// Text format ".trn": decimal n, then n rows of n {0,1} characters;
// char j of row i is 1 iff (i,j) is an arc.
std::string encode_trn(const Tournament& t);
Tournament decode_trn(const std::string& text);

}  // namespace tlab
