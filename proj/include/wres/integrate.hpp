#pragma once

#include <functional>

#include "wres/metric.hpp"
#include "wres/parallel.hpp"

namespace wres {

using ScalarField = std::function<double(const Vec&)>;

// integral over [0,2pi)^n of integrand(x) * sqrt(det g(x)) dx by the periodic
// trapezoidal rule on grid_size^n points (spectrally accurate for smooth
// periodic integrands). Deterministic pairwise reduction.
double volume_integral(const MetricField& g, const ScalarField& integrand, int grid_size,
                       par::Exec exec = par::Exec::Parallel);

// Riemannian volume of the torus.
double volume(const MetricField& g, int grid_size, par::Exec exec = par::Exec::Parallel);

}  // namespace wres
