#include "wres/integrate.hpp"

#include <cmath>

namespace wres {

double volume_integral(const MetricField& g, const ScalarField& integrand, int grid_size,
                       par::Exec exec) {
    if (grid_size < 2) throw InputError("volume_integral: grid size must be >= 2");
    const int n = g.dim;
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<size_t>(grid_size);
    const double h = kTwoPi / grid_size;
    const double sum = par::map_sum<double>(
        total,
        [&](size_t idx) {
            size_t rem = idx;
            Vec x = zero_vec(n);
            for (int i = 0; i < n; ++i) {
                x[i] = h * static_cast<double>(rem % static_cast<size_t>(grid_size));
                rem /= static_cast<size_t>(grid_size);
            }
            return integrand(x) * g.sqrt_det(x);
        },
        exec);
    return sum * std::pow(h, n);
}

double volume(const MetricField& g, int grid_size, par::Exec exec) {
    return volume_integral(
        g, [](const Vec&) { return 1.0; }, grid_size, exec);
}

}  // namespace wres
