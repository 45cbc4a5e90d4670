#pragma once

#include <functional>
#include <vector>

#include "wres/trig_poly.hpp"

namespace wres {

struct FourierOptions {
    std::array<int, kMaxDim> grid{};  // 0 = auto per axis
    double tail_tol = 1e-10;
    double drop_tol = 1e-14;
};

// Project a smooth 2pi-periodic scalar field onto a truncated Fourier series
// via a separable DFT on the given per-axis grid (axes with grid 1 are treated
// as constant). Throws ResolutionError when the upper frequency band carries
// amplitude above tail_tol.
TrigPoly project_to_trig(const std::function<double(const Vec&)>& field, int dim,
                         const std::array<int, kMaxDim>& grid_per_axis, double tail_tol = 1e-10,
                         double drop_tol = 1e-14);

// Same, from samples already laid out on the product grid with x_i varying
// fastest along axis 0 (stride 1).
TrigPoly project_samples_to_trig(const std::vector<double>& samples, int dim,
                                 const std::array<int, kMaxDim>& grid_per_axis,
                                 double tail_tol = 1e-10, double drop_tol = 1e-14);

}  // namespace wres
