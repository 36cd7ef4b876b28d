#include "tlab/enumeration.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tlab/indices.hpp"
#include "tlab/modular.hpp"
#include "tlab/parallel.hpp"

namespace tlab {

namespace {

void check_enum_cap(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw TooLarge("TooLarge: enumeration covers 1.." +
                   std::to_string(kEnumerationCap) + " vertices, got " +
                   std::to_string(n));
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

// Attach a new vertex to `parent` with out-neighbourhood `pattern`.
Tournament extended(const Tournament& parent, std::uint32_t pattern,
                    bool front) {
  int pn = parent.n();
  std::uint32_t rows[kMaxVertices] = {};
  if (!front) {
    for (int i = 0; i < pn; ++i) {
      rows[i] = parent.out_mask(i);
      if (!((pattern >> i) & 1)) rows[i] |= 1u << pn;
    }
    rows[pn] = pattern;
  } else {
    for (int i = 0; i < pn; ++i) {
      rows[i + 1] = parent.out_mask(i) << 1;
      if (!((pattern >> i) & 1)) rows[i + 1] |= 1u;
    }
    rows[0] = pattern << 1;
  }
  return Tournament::from_rows(pn + 1, rows);
}

}  // namespace

std::vector<CanonicalCode> extend_representatives(
    const std::vector<Tournament>& parents, int n, bool parallel, bool front) {
  check_enum_cap(n);
  std::size_t patterns = std::size_t{1} << (n - 1);
  std::size_t total = parents.size() * patterns;
  std::vector<CanonicalCode> codes(total);
  parallel_for(total, parallel, [&](std::size_t idx) {
    const Tournament& parent = parents[idx / patterns];
    auto pattern = static_cast<std::uint32_t>(idx % patterns);
    codes[idx] = canonical_code(extended(parent, pattern, front));
  });
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<CanonicalCode> enumerate_classes(int n, bool parallel, bool front) {
  check_enum_cap(n);
  std::vector<CanonicalCode> codes = {
      canonical_code(Tournament::transitive(1))};
  for (int m = 2; m <= n; ++m) {
    std::vector<Tournament> parents;
    parents.reserve(codes.size());
    for (const CanonicalCode& c : codes) parents.push_back(decode(c));
    codes = extend_representatives(parents, m, parallel, front);
  }
  return codes;
}

Enumerator::Enumerator(std::filesystem::path cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

std::filesystem::path Enumerator::cache_path(int n) const {
  return cache_dir_ / ("reps_" + std::to_string(n) + ".tc");
}

bool Enumerator::load_cache(int n) {
  if (cache_dir_.empty()) return false;
  std::ifstream in(cache_path(n), std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  auto fail = [&](const std::string& why) -> bool {
    throw CacheCorrupt("CacheCorrupt: " + cache_path(n).string() + ": " + why);
  };
  auto last_line = content.rfind("SHA256 ");
  if (last_line == std::string::npos || last_line == 0 ||
      content[last_line - 1] != '\n')
    return fail("missing checksum line");
  std::string body = content.substr(0, last_line);
  std::string checksum = content.substr(last_line + 7);
  while (!checksum.empty() && (checksum.back() == '\n' || checksum.back() == '\r'))
    checksum.pop_back();
  if (checksum != sha256_hex(body)) return fail("checksum mismatch");
  std::istringstream lines(body);
  std::string magic;
  int version = 0, file_n = 0;
  std::size_t count = 0;
  if (!(lines >> magic >> version >> file_n >> count) || magic != "TCACHE" ||
      version != 1 || file_n != n)
    return fail("bad header");
  std::vector<CanonicalCode> codes;
  codes.reserve(count);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    CanonicalCode code;
    try {
      code = parse_canonical(line);
    } catch (const Error&) {
      return fail("bad code line: " + line);
    }
    if (code.n != n) return fail("code of wrong order: " + line);
    if (!codes.empty() && !(codes.back() < code))
      return fail("codes not strictly sorted");
    codes.push_back(code);
  }
  if (codes.size() != count) return fail("count mismatch");
  classes_[n] = std::move(codes);
  return true;
}

void Enumerator::store_cache(int n) const {
  if (cache_dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cache_dir_, ec);
  const auto& codes = classes_.at(n);
  std::string body = "TCACHE 1 " + std::to_string(n) + " " +
                     std::to_string(codes.size()) + "\n";
  for (const CanonicalCode& c : codes) body += c.str() + "\n";
  std::filesystem::path final = cache_path(n);
  std::filesystem::path tmp = final;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body << "SHA256 " << sha256_hex(body) << "\n";
    if (!out) return;  // cache is advisory; skip on write failure
  }
  std::filesystem::rename(tmp, final, ec);
}

const std::vector<CanonicalCode>& Enumerator::representatives(int n) {
  check_enum_cap(n);
  if (auto it = classes_.find(n); it != classes_.end()) return it->second;
  if (load_cache(n)) return classes_[n];
  if (n == 1) {
    classes_[1] = {canonical_code(Tournament::transitive(1))};
  } else {
    std::vector<Tournament> parents = tournaments(n - 1);
    classes_[n] = extend_representatives(parents, n, parallel_);
  }
  store_cache(n);
  return classes_[n];
}

std::vector<Tournament> Enumerator::tournaments(int n) {
  std::vector<Tournament> out;
  for (const CanonicalCode& c : representatives(n)) out.push_back(decode(c));
  return out;
}

std::vector<CanonicalCode> Enumerator::filter(int n,
                                              const std::string& predicate) {
  const auto& codes = representatives(n);
  std::vector<char> keep(codes.size(), 0);
  std::vector<Tournament> reps = tournaments(n);
  auto apply = [&](auto&& pred) {
    parallel_for(reps.size(), parallel_,
                 [&](std::size_t i) { keep[i] = pred(reps[i]) ? 1 : 0; });
  };
  if (predicate == "delta_maximal" && n < 5)
    throw TooSmall("delta_maximal needs 5 or more vertices");
  if (predicate == "Delta_maximal" && n < 3)
    throw TooSmall("Delta_maximal needs 3 or more vertices");
  if (predicate == "indecomposable") {
    apply([](const Tournament& t) { return is_indecomposable(t); });
  } else if (predicate == "decomposable") {
    apply([](const Tournament& t) { return !is_indecomposable(t); });
  } else if (predicate == "delta_maximal") {
    apply([](const Tournament& t) { return is_delta_maximal(t); });
  } else if (predicate == "Delta_maximal") {
    apply([](const Tournament& t) { return is_big_delta_maximal(t); });
  } else {
    throw UnknownName("UnknownPredicate: " + predicate);
  }
  std::vector<CanonicalCode> out;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (keep[i]) out.push_back(codes[i]);
  return out;
}

}  // namespace tlab
