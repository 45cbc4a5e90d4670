#pragma once

#include <vector>

#include "wres/jet_matrix.hpp"
#include "wres/trig_poly.hpp"

namespace wres {

enum class MetricKind { Flat, Conformal, General };

// Riemannian metric on the torus. Flat: identity. Conformal: e^{2f} * delta
// with f a TrigPoly (entries handled exactly through exp-jets). General:
// explicit symmetric TrigPoly entries.
struct MetricField {
    int dim = 0;
    MetricKind kind = MetricKind::Flat;
    TrigPoly f;                 // conformal factor exponent (Conformal only)
    std::vector<TrigPoly> g;    // dim*dim row-major entries (General only)

    // g_{ij}(x) as a dense real matrix
    std::vector<double> eval(const Vec& x) const;
    double det(const Vec& x) const;
    double sqrt_det(const Vec& x) const;

    // order-J jets of g_{ij} at x0 (rank = dim, complex entries, real values)
    JetMatrix jets(const Vec& x0, int order) const;

    bool depends_on(int axis) const;
};

MetricField flat_metric(int dim);
MetricField conformal_metric(int dim, const TrigPoly& f);
MetricField general_metric(int dim, const std::vector<TrigPoly>& entries);

// Pointwise positive-definiteness check on a grid_per_axis^dim sample grid;
// throws SingularError when the smallest eigenvalue drops below min_eigenvalue.
void validate_positive_definite(const MetricField& g, int grid_per_axis = 16,
                                double min_eigenvalue = 1e-6);

// Smallest eigenvalue of a small symmetric matrix (cyclic Jacobi, n <= kMaxDim).
double symmetric_min_eigenvalue(const std::vector<double>& a, int n);

// Symmetric eigen-decomposition helper for small matrices: fills eigenvalues
// (ascending) and column eigenvectors of the n x n symmetric input.
void symmetric_eigen_small(const std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                           std::vector<double>& eigenvectors);

}  // namespace wres
