#include "wres/heat_coeffs.hpp"

#include <cmath>

#include "wres/curvature.hpp"
#include "wres/gamma.hpp"

namespace wres {

HeatCoefficient heat_coefficient_a0(const GeneralizedLaplacian& lap, int grid, par::Exec exec) {
    HeatCoefficient h;
    h.k = 0;
    h.integrand = "volume";
    h.value = std::pow(4.0 * M_PI, -0.5 * lap.dim) * lap.rank * volume(lap.metric, grid, exec);
    return h;
}

HeatCoefficient heat_coefficient_a2(const GeneralizedLaplacian& lap, int grid, par::Exec exec) {
    HeatCoefficient h;
    h.k = 2;
    h.integrand = "curvature-plus-E";
    const bool flat = lap.metric.kind == MetricKind::Flat;
    const ScalarField density = [&lap, flat](const Vec& x) {
        const double r = flat ? 0.0 : scalar_curvature_value(lap.metric, x);
        const MatC e = weitzenbock_endomorphism(lap, x);
        return lap.rank * r / 6.0 + matc_trace(e).real();
    };
    h.value = std::pow(4.0 * M_PI, -0.5 * lap.dim) * volume_integral(lap.metric, density, grid, exec);
    return h;
}

double phi2(const GeneralizedLaplacian& lap, int grid, par::Exec exec) {
    return std::pow(4.0 * M_PI, 0.5 * lap.dim) * heat_coefficient_a2(lap, grid, exec).value;
}

double residue_predicted_from_heat(const GeneralizedLaplacian& lap, int k, int grid,
                                   bool kw_uncorrected, par::Exec exec) {
    const int n = lap.dim;
    const int d = GeneralizedLaplacian::order;
    if (k != 0 && k != 2) throw UnsupportedError("residue_predicted_from_heat: k must be 0 or 2");
    if (k == n) throw InputError("residue_predicted_from_heat: k = n is an excluded pole");
    if (n - k <= 0) throw InputError("residue_predicted_from_heat: requires n - k > 0");
    if ((n - k) % d != 0)
        throw UnsupportedError("residue_predicted_from_heat: odd n - k is out of scope");
    const HeatCoefficient ak =
        k == 0 ? heat_coefficient_a0(lap, grid, exec) : heat_coefficient_a2(lap, grid, exec);
    const double z = static_cast<double>(n - k) / d;
    const double gamma = kw_uncorrected ? gamma_value(z + 1.0) : gamma_value(z);
    return d * ak.value / gamma;
}

}  // namespace wres
