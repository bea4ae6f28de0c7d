#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slcgan {

// Process-wide worker count for sample/channel-level loops. GEMMs stay
// single-threaded (EIGEN_DONT_PARALLELIZE), and each loop index below owns a
// disjoint output slice, so results are bitwise identical for any setting.
inline int& thread_count() {
    static int n = 1;
    return n;
}

inline void set_threads(int n) { thread_count() = n < 1 ? 1 : n; }

template <typename F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& body) {
#ifdef _OPENMP
    const int nt = thread_count();
    if (nt > 1 && end - begin > 1) {
#pragma omp parallel for num_threads(nt) schedule(static)
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
#endif
    for (std::int64_t i = begin; i < end; ++i) body(i);
}

}  // namespace slcgan
