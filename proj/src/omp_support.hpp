#pragma once

// OpenMP shims so the library also builds (serially) without -fopenmp.

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace abcvote::detail {

inline int resolve_threads(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

}  // namespace abcvote::detail
