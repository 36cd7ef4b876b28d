#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tlab/canonical.hpp"
#include "tlab/tournament.hpp"

namespace tlab {

// Largest vertex count the generator covers.
inline constexpr int kEnumerationCap = 8;

// One vertex-extension step: every n-vertex tournament restricted to its
// first n-1 vertices is an (n-1)-tournament, so attaching a new vertex to
// every parent in all 2^(n-1) orientation patterns reaches every class.
// `front` attaches the new vertex as label 0 instead of n-1; the output set
// is the same, which the tests use as an order-independence cross-check.
std::vector<CanonicalCode> extend_representatives(
    const std::vector<Tournament>& parents, int n, bool parallel,
    bool front = false);

// Full generation chain 1..n without any cache involvement.
std::vector<CanonicalCode> enumerate_classes(int n, bool parallel,
                                             bool front = false);

// Isomorphism-free generation with an on-disk cache of sorted canonical
// codes, one file per vertex count. The cache is advisory: deleting a file
// forces recomputation; a corrupted file is an error.
class Enumerator {
 public:
  // An empty cache_dir disables the on-disk cache.
  explicit Enumerator(std::filesystem::path cache_dir = {});

  // Sorted canonical codes, one per isomorphism class.
  const std::vector<CanonicalCode>& representatives(int n);

  // Decoded representatives, in code order.
  std::vector<Tournament> tournaments(int n);

  // Codes whose representative satisfies the predicate; one of
  // "indecomposable", "decomposable", "delta_maximal", "Delta_maximal".
  std::vector<CanonicalCode> filter(int n, const std::string& predicate);

  void set_parallel(bool parallel) { parallel_ = parallel; }

 private:
  std::filesystem::path cache_path(int n) const;
  bool load_cache(int n);
  void store_cache(int n) const;

  std::filesystem::path cache_dir_;
  bool parallel_ = true;
  std::map<int, std::vector<CanonicalCode>> classes_;
};

}  // namespace tlab
