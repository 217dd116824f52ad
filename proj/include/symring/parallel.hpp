#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symring {

// Run f(i) for i in [0, n). With parallel=true and OpenMP available the
// iterations run on multiple threads; iterations must be independent and
// callers must assemble results in index order for determinism. The serial
// path is the reference implementation.
template <class F>
void parallel_for(std::size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace symring
