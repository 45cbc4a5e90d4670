#pragma once

#include "wres/jet.hpp"

namespace wres {

// Dense rank x rank complex matrix (row-major), used for constant terms of
// jet matrices and for symbol evaluation results.
struct MatC {
    int rank = 0;
    std::vector<cplx> a;

    cplx& at(int i, int j) { return a[static_cast<size_t>(i * rank + j)]; }
    const cplx& at(int i, int j) const { return a[static_cast<size_t>(i * rank + j)]; }
};

MatC matc_zero(int rank);
MatC matc_identity(int rank);
MatC matc_add(const MatC& x, const MatC& y);
MatC matc_sub(const MatC& x, const MatC& y);
MatC matc_scale(const MatC& x, cplx f);
MatC matc_multiply(const MatC& x, const MatC& y);
cplx matc_trace(const MatC& x);
double matc_max_abs(const MatC& x);
// Gauss elimination with partial pivoting; SingularError when pivot < tol.
MatC matc_invert(const MatC& x, double tol = 1e-12);

// r x r matrix of jets sharing base point; entries may carry different
// truncation orders after derivatives (products truncate to the min).
struct JetMatrix {
    int rank = 0;
    int dim = 0;
    Vec base;
    std::vector<Jet> m;  // row-major

    Jet& at(int i, int j) { return m[static_cast<size_t>(i * rank + j)]; }
    const Jet& at(int i, int j) const { return m[static_cast<size_t>(i * rank + j)]; }
    int min_order() const;
    MatC value() const;
    double max_abs() const;
};

JetMatrix jet_matrix_zero(int rank, int dim, int order, const Vec& base);
JetMatrix jet_matrix_identity(int rank, int dim, int order, const Vec& base);
// rank-1 wrapper / scalar * identity
JetMatrix jet_matrix_scalar(const Jet& j, int rank);

JetMatrix jet_matrix_add(const JetMatrix& x, const JetMatrix& y);
JetMatrix jet_matrix_sub(const JetMatrix& x, const JetMatrix& y);
JetMatrix jet_matrix_scale(const JetMatrix& x, cplx f);
JetMatrix jet_matrix_scale_jet(const JetMatrix& x, const Jet& f);
JetMatrix jet_matrix_multiply(const JetMatrix& x, const JetMatrix& y);
JetMatrix jet_matrix_partial(const JetMatrix& x, int axis);
JetMatrix jet_matrix_truncate(const JetMatrix& x, int order);
Jet jet_matrix_trace(const JetMatrix& x);

// Inverse within truncation: invert the constant term, then the terminating
// Neumann series in the nilpotent remainder.
JetMatrix jet_matrix_invert(const JetMatrix& x, double tol = 1e-12);

}  // namespace wres
