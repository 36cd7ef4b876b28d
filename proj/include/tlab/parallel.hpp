#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tlab {

// Worker-count bound for the OpenMP kernels; 0 means the runtime default.
void set_max_jobs(int jobs);
int max_jobs();

// Data-parallel loop over [0, count). `parallel = false` forces the serial
// reference path; kernels are written so both paths produce identical output.
template <class Fn>
void parallel_for(std::size_t count, bool parallel, Fn&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace tlab
