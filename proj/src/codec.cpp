#include "tlab/codec.hpp"

#include <sstream>
#include <vector>

namespace tlab {

namespace {

constexpr char kHex[] = "0123456789ABCDEF";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw ParseError(std::string("bad hex digit '") + c + "' in compact code");
}

}  // namespace

std::string encode_compact(const Tournament& t) {
  int n = t.n();
  int pairs = n * (n - 1) / 2;
  std::vector<std::uint8_t> bytes((pairs + 7) / 8, 0);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (t.arc(i, j)) bytes[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
  std::string out = "T" + std::to_string(n) + ":";
  for (std::uint8_t b : bytes) {
    out += kHex[b >> 4];
    out += kHex[b & 0xF];
  }
  return out;
}

Tournament decode_compact(const std::string& code) {
  if (code.empty() || code[0] != 'T')
    throw ParseError("compact code must start with 'T'");
  auto colon = code.find(':');
  if (colon == std::string::npos)
    throw ParseError("compact code missing ':'");
  int n;
  try {
    std::size_t used = 0;
    n = std::stoi(code.substr(1, colon - 1), &used);
    if (used != colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("bad vertex count in compact code: " + code);
  }
  if (n < 1 || n > kMaxVertices)
    throw TooLarge("compact code vertex count out of range: " + code);
  int pairs = n * (n - 1) / 2;
  std::string hex = code.substr(colon + 1);
  if (static_cast<int>(hex.size()) != 2 * ((pairs + 7) / 8))
    throw ParseError("compact code has wrong length: " + code);
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<std::uint8_t>((hex_value(hex[2 * i]) << 4) |
                                         hex_value(hex[2 * i + 1]));
  std::uint32_t rows[kMaxVertices] = {};
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      bool bit = (bytes[k / 8] >> (7 - k % 8)) & 1;
      if (bit)
        rows[i] |= 1u << j;
      else
        rows[j] |= 1u << i;
    }
  for (; k < 8 * static_cast<int>(bytes.size()); ++k)
    if ((bytes[k / 8] >> (7 - k % 8)) & 1)
      throw ParseError("nonzero padding bits in compact code: " + code);
  return Tournament::from_rows(n, rows);
}

std::string encode_trn(const Tournament& t) {
  std::string out = std::to_string(t.n()) + "\n";
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.n(); ++j) out += t.arc(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Tournament decode_trn(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw ParseError(".trn: missing vertex count");
  if (n < 1 || n > kMaxVertices)
    throw TooLarge(".trn vertex count out of range: " + std::to_string(n));
  std::uint32_t rows[kMaxVertices] = {};
  for (int i = 0; i < n; ++i) {
    std::string line;
    if (!(in >> line) || static_cast<int>(line.size()) != n)
      throw ParseError(".trn: row " + std::to_string(i) + " malformed");
    for (int j = 0; j < n; ++j) {
      if (line[j] == '1')
        rows[i] |= 1u << j;
      else if (line[j] != '0')
        throw ParseError(".trn: row " + std::to_string(i) +
                         " has a character outside {0,1}");
    }
  }
  std::string rest;
  if (in >> rest) throw ParseError(".trn: trailing content");
  for (int i = 0; i < n; ++i) {
    if (rows[i] & (1u << i))
      throw ParseError(".trn: nonzero diagonal at row " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      bool ij = (rows[i] >> j) & 1, ji = (rows[j] >> i) & 1;
      if (ij == ji)
        throw ParseError(".trn: pair {" + std::to_string(i) + "," +
                         std::to_string(j) + "} " +
                         (ij ? "oriented both ways" : "unoriented"));
    }
  }
  return Tournament::from_rows(n, rows);
}

}  // namespace tlab
