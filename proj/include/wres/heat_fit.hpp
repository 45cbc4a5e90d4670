#pragma once

#include <map>

#include "wres/spectrum.hpp"

namespace wres {

struct HeatTraceFit {
    std::vector<double> t_grid;
    std::map<int, double> coefficients;  // k -> fitted a_k
    std::map<int, double> uncertainty;   // residual-based 1-sigma estimates
    double residual_norm = 0.0;
    double tail_bound = 0.0;  // spectral-truncation estimate at t_min
    bool valid = true;
};

// Weighted least squares of sum_{k<=K} a_k t^{(k-n)/2} against the heat trace
// on a log-spaced grid; weight t^{n/2} equalizes term magnitudes. Requires
// cutoff * t_min >= 30 so the spectral tail stays controlled; the fit is
// flagged invalid when the tail estimate exceeds a tenth of the smallest
// fitted coefficient magnitude.
HeatTraceFit fit_heat_coefficients(const SpectrumModel& spec, int n, int K, double t_min,
                                   double t_max, int points,
                                   par::Exec exec = par::Exec::Parallel);

}  // namespace wres
