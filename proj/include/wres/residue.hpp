#pragma once

#include <functional>
#include <optional>

#include "wres/compose.hpp"
#include "wres/settings.hpp"
#include "wres/sphere.hpp"

namespace wres {

struct CosphereIntegral {
    cplx value{};
    bool has_component = false;
};

// Integral of tr sigma_{-n}(x0, xi) over the unit cosphere |xi| = 1 at the
// symbol's base point. Exact-monomial path: substitute xi = L eta with
// L^T G L = I (G the inverse-metric value), which turns denominators into
// |eta|^{2q} = 1 on the sphere and leaves a polynomial integrated exactly by
// sphere_monomial_integral; the change of variables contributes |det L| =
// sqrt(det g). Gauss-product path: direct spherical quadrature.
CosphereIntegral cosphere_trace_integral(const GradedSymbol& symbol, int n,
                                         SphereRule rule = SphereRule::ExactMonomial,
                                         int gauss_points = 48);

struct ResidueResult {
    double value = 0.0;
    double imaginary_leak = 0.0;
    int x_grid = 0;
    SphereRule rule = SphereRule::ExactMonomial;
    bool valid = true;           // imaginary leak within threshold
    bool has_component = true;   // order-(-n) component present
    std::vector<std::pair<Vec, cplx>> per_point_density;
};

using SymbolFactory = std::function<GradedSymbol(const Vec&)>;

// (2pi)^{-n} integral over the torus x-grid of the cosphere trace integral of
// the factory's order-(-n) component. The grid runs over `axes` only (the
// integrand is constant along the remaining axes, which contribute exact 2pi
// factors); reduction is a fixed pairwise tree, bit-stable across thread
// counts.
ResidueResult wodzicki_residue_of(const SymbolFactory& factory, int dim,
                                  const std::vector<int>& axes, const Numerics& numerics);

// Residue of Delta^{-m} (Eq.-2.1 pipeline: negative-power symbol at each grid
// point, cosphere integration, torus average).
ResidueResult wodzicki_residue(const GeneralizedLaplacian& lap, int m, const Numerics& numerics);

// Renormalized variant: vol(S^{n-1})^{-1} replaces (2pi)^{-n}, i.e.
// 2^{n-1} pi^{n/2} Gamma(n/2) times the Wodzicki residue.
double kw_normalized_residue(const GeneralizedLaplacian& lap, int m, const Numerics& numerics);

double kw_normalization_factor(int n);

}  // namespace wres
