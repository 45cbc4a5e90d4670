#pragma once

#include <vector>

#include "wres/common.hpp"
#include "wres/multi_index.hpp"
#include "wres/trig_poly.hpp"

namespace wres {

// Truncated Taylor jet at a base point. Coefficients are monomial
// coefficients f_alpha = d^alpha f(x0)/alpha!, stored densely in graded-lex
// order against jet_table(dim, order). Scalars are complex throughout.
struct Jet {
    int dim = 0;
    int order = 0;
    Vec base;
    std::vector<cplx> c;

    cplx value() const { return c.empty() ? cplx{} : c[0]; }
    cplx coefficient(const Mi& alpha) const;
    double max_abs() const;
};

Jet jet_zero(int dim, int order, const Vec& base);
Jet jet_constant(int dim, int order, const Vec& base, cplx value);
// coordinate function x_axis as a jet (constant + linear term), order >= 1
Jet jet_coordinate(int dim, int order, const Vec& base, int axis);

// Exact order-J Taylor jet of a trigonometric polynomial.
Jet trig_jet(const TrigPoly& f, const Vec& x0, int order);

Jet jet_truncate(const Jet& a, int order);
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, cplx factor);

// Truncated Cauchy product; result order = min of input orders.
Jet jet_multiply(const Jet& a, const Jet& b);

// Multiplicative inverse within truncation; requires |constant term| above
// unit_threshold.
Jet jet_invert(const Jet& a, double unit_threshold = 1e-12);

// exp(a) within truncation (exact series in the nilpotent part).
Jet jet_exp(const Jet& a);

// Jet of df/dx_axis at the same base point, order reduced by one.
Jet jet_partial(const Jet& a, int axis);

}  // namespace wres
