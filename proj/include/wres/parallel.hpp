#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wres::par {

enum class Exec { Serial, Parallel };

// Pairwise tree reduction over the natural element order. The result depends
// only on the buffer contents, not on thread count, so parallel and serial
// kernel variants produce bitwise-identical sums.
template <class T>
T pairwise_sum(std::span<const T> v) {
    const size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T s = v[0];
        for (size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <class T, class F>
void fill_buffer_serial(std::vector<T>& out, size_t count, F&& f) {
    out.resize(count);
    for (size_t i = 0; i < count; ++i) out[i] = f(i);
}

template <class T, class F>
void fill_buffer_parallel(std::vector<T>& out, size_t count, F&& f) {
    out.resize(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        out[static_cast<size_t>(i)] = f(static_cast<size_t>(i));
}

// Evaluate f over [0,count), reduce with the fixed pairwise tree.
template <class T, class F>
T map_sum(size_t count, F&& f, Exec mode = Exec::Parallel) {
    std::vector<T> buf;
    if (mode == Exec::Parallel)
        fill_buffer_parallel(buf, count, f);
    else
        fill_buffer_serial(buf, count, f);
    return pairwise_sum(std::span<const T>(buf));
}

}  // namespace wres::par
