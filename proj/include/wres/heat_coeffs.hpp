#pragma once

#include "wres/integrate.hpp"
#include "wres/laplacian.hpp"

namespace wres {

struct HeatCoefficient {
    int k = 0;
    double value = 0.0;
    // "volume" for a0, "curvature-plus-E" for a2
    const char* integrand = "";
};

// a0 = (4pi)^{-n/2} * rank * Vol(M)
HeatCoefficient heat_coefficient_a0(const GeneralizedLaplacian& lap, int grid,
                                    par::Exec exec = par::Exec::Parallel);

// a2 = (4pi)^{-n/2} * integral of tr(r/6 * Id + E) dvol, with r the scalar
// curvature and E the Weitzenboeck endomorphism of the operator.
HeatCoefficient heat_coefficient_a2(const GeneralizedLaplacian& lap, int grid,
                                    par::Exec exec = par::Exec::Parallel);

// phi_2 = (4pi)^{n/2} a_2
double phi2(const GeneralizedLaplacian& lap, int grid, par::Exec exec = par::Exec::Parallel);

// Prediction res(Delta^{-(n-k)/2}) = d * a_k / Gamma((n-k)/d) with d = 2.
// When kw_uncorrected is set the Gamma argument is shifted by one
// (Gamma(z+1) = z Gamma(z)), reproducing the wrong proportionality factor;
// the mutation exists so tests can verify the identity suite catches it.
double residue_predicted_from_heat(const GeneralizedLaplacian& lap, int k, int grid,
                                   bool kw_uncorrected = false,
                                   par::Exec exec = par::Exec::Parallel);

}  // namespace wres
