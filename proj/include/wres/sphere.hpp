#pragma once

#include <functional>
#include <vector>

#include "wres/common.hpp"
#include "wres/multi_index.hpp"

namespace wres {

// Exact integral of xi^beta over the unit sphere S^{n-1}: zero when any
// exponent is odd, else 2 prod_i Gamma((beta_i+1)/2) / Gamma((|beta|+n)/2).
double sphere_monomial_integral(const Mi& beta, int n);

// Gauss-Legendre nodes/weights on [-1,1] (Newton on Legendre polynomials).
void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights);

// Product quadrature on S^{n-1}: Gauss-Legendre in the polar angles (surface
// weight folded into the quadrature weight) and a trapezoid in the azimuth.
struct SpherePoint {
    Vec eta;
    double weight;
};
std::vector<SpherePoint> sphere_quadrature(int n, int polar_points);

double sphere_integrate(int n, int polar_points, const std::function<double(const Vec&)>& f);

}  // namespace wres
