#pragma once

#include <cstddef>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blowlab {

/// Execution policy for the sweep kernels. Serial is the reference path the
/// tests compare against; results must be bit-identical because every cell
/// writes its own slot and reductions run as a fixed sequential pass.
enum class Exec { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t n, Exec policy, Fn&& body) {
#ifdef _OPENMP
    if (policy == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)policy;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace blowlab
