#pragma once

#include <vector>

namespace wres {

// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix (row-major,
// destroyed in place). Returns eigenvalues sorted ascending. Converges when
// the off-diagonal Frobenius norm drops below tol * ||A||_F; throws
// NumericError after max_sweeps sweeps. Deterministic sweep order.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n, double tol = 1e-12,
                                       int max_sweeps = 30);

}  // namespace wres
