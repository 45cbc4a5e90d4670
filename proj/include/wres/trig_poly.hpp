#pragma once

#include <vector>

#include "wres/common.hpp"
#include "wres/multi_index.hpp"

namespace wres {

// One Fourier mode: c*cos(k.x) + s*sin(k.x).
struct TrigTerm {
    std::array<int, kMaxDim> k{};
    double c = 0.0;
    double s = 0.0;
};

// Finite Fourier sum on the torus [0,2pi)^n. Closed under differentiation and
// multiplication; evaluation and derivatives are exact up to rounding.
struct TrigPoly {
    int dim = 0;
    std::vector<TrigTerm> terms;

    double eval(const Vec& x) const;
    TrigPoly derivative(int axis) const;

    // max |k_axis| over all terms (0 when the field does not vary along axis)
    int max_frequency(int axis) const;
    bool depends_on(int axis) const { return max_frequency(axis) > 0; }
    bool is_zero() const { return terms.empty(); }
};

TrigPoly trig_zero(int dim);
TrigPoly trig_constant(int dim, double value);
// single mode c*cos(k.x) + s*sin(k.x)
TrigPoly trig_mode(int dim, const std::array<int, kMaxDim>& k, double c, double s);

TrigPoly trig_add(const TrigPoly& a, const TrigPoly& b);
TrigPoly trig_scale(const TrigPoly& a, double factor);
TrigPoly trig_multiply(const TrigPoly& a, const TrigPoly& b);

// Merge duplicate modes, flip frequencies into the canonical half-space
// (first nonzero component positive), drop negligible amplitudes.
void trig_canonicalize(TrigPoly& p, double drop_tol = 1e-15);

}  // namespace wres
