#pragma once

#include "wres/curvature.hpp"
#include "wres/fourier.hpp"
#include "wres/metric.hpp"

namespace wres {

// Rank-r second-order operator Delta = -(g^{ij} d_i d_j Id + b^i d_i + c)
// on the torus; the principal symbol is scalar: g^{ij} xi_i xi_j * Id.
// Operator order is fixed at 2.
struct GeneralizedLaplacian {
    int dim = 0;
    int rank = 1;
    MetricField metric;
    std::vector<TrigPoly> b;  // [axis][i][j] flat: axis*rank*rank + i*rank + j
    std::vector<TrigPoly> c;  // [i][j] flat: i*rank + j
    static constexpr int order = 2;

    const TrigPoly& b_at(int axis, int i, int j) const {
        return b[static_cast<size_t>((axis * rank + i) * rank + j)];
    }
    const TrigPoly& c_at(int i, int j) const { return c[static_cast<size_t>(i * rank + j)]; }

    bool depends_on(int axis) const;
    // axes along which any coefficient field actually varies
    std::vector<int> dependent_axes() const;
};

GeneralizedLaplacian make_generalized_laplacian(const MetricField& metric, int rank,
                                                std::vector<TrigPoly> b, std::vector<TrigPoly> c);

// Componentwise flat Laplacian (b = 0, c = 0).
GeneralizedLaplacian flat_laplacian(int dim, int rank = 1);

// Scalar Laplace-Beltrami operator of the metric; first-order coefficients are
// Fourier-projected when the metric is curved.
GeneralizedLaplacian laplace_beltrami(const MetricField& metric,
                                      const FourierOptions& opts = {});

// Endomorphism E(x0) in the decomposition Delta = nabla* nabla - E, where the
// compatible connection is recovered as
//   omega_i = 1/2 g_{ij} (b^j + g^{kl} Gamma_{kl}^j Id)
// and E = c - g^{ij}(d_i omega_j + omega_i omega_j - Gamma_{ij}^k omega_k).
MatC weitzenbock_endomorphism(const GeneralizedLaplacian& lap, const Vec& x0);

// Operator with Weitzenboeck endomorphism forced to -r/4 * Id (the normal form
// of a Dirac square) and the given bundle connection. Coefficient fields that
// involve the curved metric are Fourier-projected onto TrigPoly with a tail
// check; omega is indexed like GeneralizedLaplacian::b.
GeneralizedLaplacian build_lichnerowicz(const MetricField& metric, int rank,
                                        const std::vector<TrigPoly>& omega,
                                        const FourierOptions& opts = {});

// Random bundle connection with modes along the given axes; entries are
// amplitude-bounded TrigPoly matrices. Deterministic in the seed.
std::vector<TrigPoly> random_connection(int dim, int rank, double amplitude, uint64_t seed,
                                        const std::vector<int>& axes = {0, 1});

}  // namespace wres
