#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zsindex {

// threads <= 0 means "use the runtime default".
inline int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

}  // namespace zsindex
