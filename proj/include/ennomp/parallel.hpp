#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ennomp {

// Worker count for parallel fan-out sections. ENNOMP_THREADS caps it;
// unset or 0 means "whatever OpenMP would use".
inline int worker_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("ENNOMP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

}  // namespace ennomp
