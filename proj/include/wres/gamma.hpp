#pragma once

#include "wres/common.hpp"

namespace wres {

// Exact Gamma at positive half-integers: Gamma(m) = (m-1)!,
// Gamma(m+1/2) = (2m)! sqrt(pi) / (4^m m!). Other arguments are unsupported.
double gamma_value(double q);

double factorial(int n);

// volume of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2)
double sphere_volume(int n);

}  // namespace wres
