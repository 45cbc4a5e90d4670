#include "wres/gamma.hpp"

#include <cmath>

namespace wres {

double factorial(int n) {
    if (n < 0) throw InputError("factorial of negative integer");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double gamma_value(double q) {
    const double twice = 2.0 * q;
    const long long t = std::llround(twice);
    if (std::abs(twice - static_cast<double>(t)) > 1e-9 || t <= 0)
        throw UnsupportedError("gamma_value: only positive half-integer arguments supported");
    if (t % 2 == 0) return factorial(static_cast<int>(t / 2) - 1);
    const int m = static_cast<int>((t - 1) / 2);  // q = m + 1/2
    return factorial(2 * m) * std::sqrt(M_PI) / (std::pow(4.0, m) * factorial(m));
}

double sphere_volume(int n) {
    if (n < 1) throw InputError("sphere_volume: dimension must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * n) / gamma_value(0.5 * n);
}

}  // namespace wres
