#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardcore {

// Scan-style kernels take an execution policy.  Parallel runs must produce
// bit-identical results to serial ones, so every kernel writes through a
// unique index and never reduces across iterations in floating point.
enum class Exec { serial, parallel };

template <typename F>
void for_each_index(int n, Exec exec, F&& body) {
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) body(i);
    return;
#endif
  }
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace hardcore
