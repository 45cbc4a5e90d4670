#pragma once

#include <cstdint>

#include "wres/parallel.hpp"

namespace wres {

enum class SphereRule { ExactMonomial, GaussProduct };

// Numeric knobs shared by the residue / heat / spectral pipelines. Zero means
// "derive the default from the problem dimension".
struct Numerics {
    int jet_order = 0;      // default: dim
    int symbol_cutoff = 0;  // default: -dim
    int x_grid = 0;         // default: 8 per axis for dim 4, 32 for dim 2
    SphereRule sphere_rule = SphereRule::ExactMonomial;
    int gauss_points = 48;  // gauss-product sphere rule resolution
    double fit_tmin = 0.0;  // heat-fit window, 0 = per-model default
    double fit_tmax = 0.0;
    int fit_points = 40;
    uint64_t seed = 7;
    int workers = 1;
    bool grid_doubling = true;  // attach grid-doubling deltas to reports
    // Test hook mirroring the uncorrected proportionality factor: replaces
    // Gamma((n-k)/d) by ((n-k)/d)*Gamma((n-k)/d) in identity predictions.
    bool kw_uncorrected_gamma = false;
    par::Exec exec = par::Exec::Parallel;

    int jet_order_for(int dim) const { return jet_order > 0 ? jet_order : dim; }
    int cutoff_for(int dim) const { return symbol_cutoff < 0 ? symbol_cutoff : -dim; }
    int x_grid_for(int dim) const {
        if (x_grid > 0) return x_grid;
        if (dim >= 4) return 8;
        if (dim == 3) return 12;
        return 32;
    }
};

}  // namespace wres
