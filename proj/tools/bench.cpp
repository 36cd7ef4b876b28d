// Compares the serial reference path against the OpenMP kernels on the two
// hot sweeps: isomorphism-free enumeration and the exhaustive checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tlab/enumeration.hpp"
#include "tlab/parallel.hpp"
#include "tlab/verify.hpp"

using namespace tlab;

namespace {

template <class Fn>
double seconds(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 7;
  if (n < 3 || n > kEnumerationCap) {
    std::fprintf(stderr, "usage: tlab-bench [n between 3 and %d]\n",
                 kEnumerationCap);
    return 2;
  }
  std::printf("workers: %d\n", max_jobs());

  std::vector<CanonicalCode> serial_codes, parallel_codes;
  double ts = seconds([&] { serial_codes = enumerate_classes(n, false); });
  double tp = seconds([&] { parallel_codes = enumerate_classes(n, true); });
  bool same = serial_codes == parallel_codes;
  std::printf("enumerate n=%d (%zu classes): serial %.3fs, openmp %.3fs, "
              "speedup %.2fx, %s\n",
              n, serial_codes.size(), ts, tp, ts / tp,
              same ? "identical output" : "OUTPUT MISMATCH");

  Enumerator reps;
  reps.representatives(n);  // warm, so the checks time only the sweep
  VerificationReport rs, rp;
  double vs =
      seconds([&] { rs = run_check("thm-deltan-formula", 5, n, reps, false); });
  double vp =
      seconds([&] { rp = run_check("thm-deltan-formula", 5, n, reps, true); });
  std::printf("delta sweep n<=%d (%ld instances): serial %.3fs, openmp %.3fs, "
              "speedup %.2fx, %s\n",
              n, rs.instances_checked, vs, vp, vs / vp,
              rs.pass == rp.pass ? "verdicts agree" : "VERDICT MISMATCH");
  return same && rs.pass == rp.pass ? 0 : 1;
}
