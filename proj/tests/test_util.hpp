#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "wres/common.hpp"
#include "wres/jet.hpp"
#include "wres/multi_index.hpp"
#include "wres/trig_poly.hpp"

namespace wres::testutil {

// Fourth-order central differences of a scalar evaluator for mixed partials:
// independent oracle for jet coefficients. Nested first-derivative stencils;
// step around 2e-2 balances truncation against roundoff for |alpha| <= 3.
inline double central_difference(const std::function<double(const Vec&)>& f, Vec x, const Mi& alpha,
                                 double step = 2e-2) {
    for (int axis = 0; axis < kMaxDim; ++axis) {
        if (alpha[static_cast<size_t>(axis)] == 0) continue;
        Mi lowered = alpha;
        lowered[static_cast<size_t>(axis)] -= 1;
        auto g = [&](double offset) {
            Vec y = x;
            y[axis] += offset;
            return central_difference(f, y, lowered, step);
        };
        return (-g(2.0 * step) + 8.0 * g(step) - 8.0 * g(-step) + g(-2.0 * step)) / (12.0 * step);
    }
    return f(x);
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// random trig poly with modes up to |k|_inf <= max_freq on the first `dims`
// axes
inline TrigPoly random_trig(Rng& rng, int dim, int active_axes, int max_freq, double amplitude) {
    TrigPoly p = trig_zero(dim);
    const int n_modes = 2 + static_cast<int>(rng.next_below(3));
    for (int m = 0; m < n_modes; ++m) {
        std::array<int, kMaxDim> k{};
        for (int a = 0; a < active_axes; ++a)
            k[static_cast<size_t>(a)] =
                static_cast<int>(rng.next_below(static_cast<uint64_t>(2 * max_freq + 1))) - max_freq;
        p = trig_add(p, trig_mode(dim, k, amplitude * rng.uniform(-1.0, 1.0),
                                  amplitude * rng.uniform(-1.0, 1.0)));
    }
    return p;
}

inline Jet random_jet(Rng& rng, int dim, int order, const Vec& base) {
    Jet j = jet_zero(dim, order, base);
    for (cplx& c : j.c) c = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return j;
}

inline double jet_max_diff(const Jet& a, const Jet& b) {
    double m = 0.0;
    const size_t common = std::min(a.c.size(), b.c.size());
    for (size_t i = 0; i < common; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

}  // namespace wres::testutil
