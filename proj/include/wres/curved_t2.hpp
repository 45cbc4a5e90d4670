#pragma once

#include "wres/metric.hpp"
#include "wres/spectrum.hpp"

namespace wres {

// Numerical spectrum of the Laplace-Beltrami operator e^{-2f} Delta_flat of a
// conformal metric on T^2. Assembles the symmetric matrix W K W with K the
// Fourier-collocation flat Laplacian on the gridN^2 grid and W = diag(e^{-f}),
// which is similar to e^{-2f} K, and solves it with the dense Jacobi
// eigensolver. gridN must be even and >= 16.
SpectrumModel curved_t2_spectrum(const MetricField& metric, int grid_n);

}  // namespace wres
