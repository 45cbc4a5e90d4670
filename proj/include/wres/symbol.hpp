#pragma once

#include <map>
#include <memory>

#include "wres/jet_matrix.hpp"

namespace wres {

// Leading quadratic form Q(x,xi) = g^{ij}(x) xi_i xi_j as inverse-metric jets
// at the base point; shared by every rational term of a symbol.
struct QuadraticForm {
    int dim = 0;
    Vec base;
    std::vector<Jet> g;  // dim*dim row-major, symmetric

    const Jet& at(int i, int j) const { return g[static_cast<size_t>(i * dim + j)]; }
    Jet& at(int i, int j) { return g[static_cast<size_t>(i * dim + j)]; }

    // value matrix at the base point (real part)
    std::vector<double> value() const;
    double eval(const Vec& xi) const;
    bool same_as(const QuadraticForm& other, double tol = 1e-13) const;
};

std::shared_ptr<const QuadraticForm> make_quadratic_form(const JetMatrix& inverse_metric_jets);

// Term key: xi-monomial exponent and denominator power, ordered graded-lex on
// beta then by q so symbol passes are deterministic.
struct TermKey {
    Mi beta{};
    int q = 0;
    bool operator<(const TermKey& other) const {
        if (beta != other.beta) return mi_graded_lex_less(beta, other.beta);
        return q < other.q;
    }
};

// Homogeneous component of order m: sum of xi^beta N(x) / Q(x,xi)^q with
// |beta| - 2q = m for every term.
struct SymbolComponent {
    int order = 0;
    std::map<TermKey, JetMatrix> terms;

    // min truncation order over coefficient jets (large when empty)
    int min_jet_order() const;
    double max_abs() const;
    bool is_polynomial() const;
};

void component_add_term(SymbolComponent& comp, const Mi& beta, int q, const JetMatrix& coeff);
SymbolComponent component_scale(const SymbolComponent& comp, cplx factor);
SymbolComponent component_add(const SymbolComponent& a, const SymbolComponent& b);
// product of homogeneous components (orders add)
SymbolComponent component_multiply(const SymbolComponent& a, const SymbolComponent& b);
// divide by Q: every term picks up one denominator power (order drops by 2)
SymbolComponent component_divide_by_q(const SymbolComponent& comp);
// d/d xi_axis (order drops by 1); qform required when any term has q > 0
SymbolComponent component_xi_derivative(const SymbolComponent& comp, int axis,
                                        const QuadraticForm* qform);
// d/d x_axis (order unchanged, jet orders drop by 1)
SymbolComponent component_x_derivative(const SymbolComponent& comp, int axis,
                                       const QuadraticForm* qform);
// Raise every term to the shared maximal denominator power and merge: a
// component that vanishes as a function becomes coefficient-zero up to
// rounding, which makes residuals and component comparisons well defined.
SymbolComponent component_common_denominator(const SymbolComponent& comp,
                                             const QuadraticForm* qform);

// Graded symbol at one base point: components for max_order >= m >= cutoff.
struct GradedSymbol {
    Vec base;
    int dim = 0;
    int rank = 1;
    int max_order = 0;
    int cutoff = 0;
    std::map<int, SymbolComponent> comps;
    std::shared_ptr<const QuadraticForm> qform;  // null for polynomial symbols
    bool scalar_principal = false;

    const SymbolComponent* component(int order) const;
    bool has_component(int order) const { return comps.count(order) > 0; }
};

// Numeric value of one component at (base point, xi) from constant jet terms.
MatC evaluate_component(const GradedSymbol& symbol, int order, const Vec& xi);

}  // namespace wres
