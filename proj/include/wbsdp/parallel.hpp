#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wbsdp {

// Kernels with data-parallel inner loops come in two flavours: an OpenMP
// version used by default and a serial reference kept for testing and for
// the bench target. This switch routes the default path.
inline bool& parallelEnabled() {
    static bool enabled = true;
    return enabled;
}

inline int hardwareThreads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename F>
void parallelFor(std::size_t n, F&& body) {
    if (parallelEnabled()) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace wbsdp
