#pragma once

#include "wres/laplacian.hpp"
#include "wres/symbol.hpp"

namespace wres {

// Complete symbol of the operator at x0 under the D = -i d convention:
// sigma_2 = Q * Id, sigma_1 = -i b^i xi_i, sigma_0 = -c.
GradedSymbol laplacian_symbol(const GeneralizedLaplacian& lap, const Vec& x0, int jet_order);

// Symbol of the first-order differential operator a^i D_i + a0 (polynomial,
// no denominators): sigma_1 = a^i xi_i, sigma_0 = a0.
GradedSymbol first_order_symbol(int dim, int rank, const Vec& x0,
                                const std::vector<TrigPoly>& a_first,
                                const std::vector<TrigPoly>& a_zero, int jet_order);

// Identity symbol (single order-0 component Id).
GradedSymbol identity_symbol(int dim, int rank, const Vec& x0, int jet_order);

// Asymptotic product sigma(A o B) ~ sum_alpha (1/alpha!) dxi^alpha sigma_A *
// Dx^alpha sigma_B, graded and truncated below `cutoff`. Throws BudgetError
// when the B-side jet budget cannot support the required x-derivatives.
GradedSymbol compose(const GradedSymbol& a, const GradedSymbol& b, int cutoff);

// Left parametrix q of an operator with scalar principal part: components
// q_{-2}, ..., down to `cutoff` such that compose(q, sigma) = Id + lower order.
GradedSymbol parametrix(const GradedSymbol& laplacian_sym, int cutoff);

// Symbol of Delta^{-m} at x0 (parametrix composed with itself m-1 times).
GradedSymbol negative_power_symbol(const GeneralizedLaplacian& lap, int m, const Vec& x0,
                                   int cutoff, int jet_order);

}  // namespace wres
