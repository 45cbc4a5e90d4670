#pragma once

#include "wres/metric.hpp"

namespace wres {

// Jets of the inverse metric g^{ij} at x0.
JetMatrix inverse_metric_jets(const MetricField& g, const Vec& x0, int order);

// Christoffel symbols Gamma^k_{ij} as jets, flat-indexed [k*dim*dim + i*dim + j].
std::vector<Jet> christoffel_jets(const MetricField& g, const Vec& x0, int order);

// Order-J jet of the scalar curvature at x0 (consumes metric jets at J+2).
// Conventions: r(round unit sphere) = n(n-1); for g = e^{2f} delta on T^2,
// r = -2 e^{-2f} (f_{11} + f_{22}).
Jet scalar_curvature(const MetricField& g, const Vec& x0, int order);

double scalar_curvature_value(const MetricField& g, const Vec& x0);

}  // namespace wres
