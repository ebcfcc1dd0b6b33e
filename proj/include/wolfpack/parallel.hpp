#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wolfpack {

// Runs fn(0..count-1) over independent cells. jobs == 1 is the serial
// reference path; jobs == 0 uses every available thread; jobs > 1 pins the
// OpenMP team size. Cells must write only to their own slots, so the result
// is identical regardless of jobs. The first exception thrown by a cell is
// rethrown after the loop drains.
template <typename Fn>
void parallel_cells(int count, int jobs, Fn&& fn) {
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr first_error = nullptr;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#pragma omp critical(wolfpack_parallel_cells_error)
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    for (int i = 0; i < count; ++i) fn(i);
#endif
}

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace wolfpack
