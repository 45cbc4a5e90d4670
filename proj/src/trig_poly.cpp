#include "wres/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wres {

double TrigPoly::eval(const Vec& x) const {
    if (x.n != dim) throw InputError("TrigPoly::eval: dimension mismatch");
    double v = 0.0;
    for (const TrigTerm& t : terms) {
        double phase = 0.0;
        for (int i = 0; i < dim; ++i) phase += t.k[static_cast<size_t>(i)] * x[i];
        v += t.c * std::cos(phase) + t.s * std::sin(phase);
    }
    return v;
}

TrigPoly TrigPoly::derivative(int axis) const {
    if (axis < 0 || axis >= dim) throw InputError("TrigPoly::derivative: axis out of range");
    TrigPoly out;
    out.dim = dim;
    out.terms.reserve(terms.size());
    for (const TrigTerm& t : terms) {
        const double k = t.k[static_cast<size_t>(axis)];
        if (k == 0.0) continue;
        // d/dx [c cos + s sin] = k*s cos - k*c sin
        TrigTerm d;
        d.k = t.k;
        d.c = k * t.s;
        d.s = -k * t.c;
        out.terms.push_back(d);
    }
    trig_canonicalize(out);
    return out;
}

int TrigPoly::max_frequency(int axis) const {
    int m = 0;
    for (const TrigTerm& t : terms) m = std::max(m, std::abs(t.k[static_cast<size_t>(axis)]));
    return m;
}

TrigPoly trig_zero(int dim) {
    TrigPoly p;
    p.dim = dim;
    return p;
}

TrigPoly trig_constant(int dim, double value) {
    TrigPoly p;
    p.dim = dim;
    if (value != 0.0) p.terms.push_back({{}, value, 0.0});
    return p;
}

TrigPoly trig_mode(int dim, const std::array<int, kMaxDim>& k, double c, double s) {
    TrigPoly p;
    p.dim = dim;
    TrigTerm t;
    t.k = k;
    t.c = c;
    t.s = s;
    p.terms.push_back(t);
    trig_canonicalize(p);
    return p;
}

TrigPoly trig_add(const TrigPoly& a, const TrigPoly& b) {
    if (a.dim != b.dim) throw InputError("trig_add: dimension mismatch");
    TrigPoly out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    trig_canonicalize(out);
    return out;
}

TrigPoly trig_scale(const TrigPoly& a, double factor) {
    TrigPoly out = a;
    for (TrigTerm& t : out.terms) {
        t.c *= factor;
        t.s *= factor;
    }
    trig_canonicalize(out);
    return out;
}

TrigPoly trig_multiply(const TrigPoly& a, const TrigPoly& b) {
    if (a.dim != b.dim) throw InputError("trig_multiply: dimension mismatch");
    TrigPoly out;
    out.dim = a.dim;
    // product-to-sum: cosA cosB, cosA sinB, sinA cosB, sinA sinB all split into
    // modes at k_a - k_b and k_a + k_b with half amplitudes
    for (const TrigTerm& ta : a.terms) {
        for (const TrigTerm& tb : b.terms) {
            std::array<int, kMaxDim> kd{}, ks{};
            for (size_t i = 0; i < kMaxDim; ++i) {
                kd[i] = ta.k[i] - tb.k[i];
                ks[i] = ta.k[i] + tb.k[i];
            }
            // cos(A)cos(B) = (cos(A-B)+cos(A+B))/2
            // sin(A)sin(B) = (cos(A-B)-cos(A+B))/2
            // sin(A)cos(B) = (sin(A-B)+sin(A+B))/2
            // cos(A)sin(B) = (-sin(A-B)+sin(A+B))/2
            TrigTerm d, s;
            d.k = kd;
            s.k = ks;
            d.c = 0.5 * (ta.c * tb.c + ta.s * tb.s);
            s.c = 0.5 * (ta.c * tb.c - ta.s * tb.s);
            d.s = 0.5 * (ta.s * tb.c - ta.c * tb.s);
            s.s = 0.5 * (ta.s * tb.c + ta.c * tb.s);
            out.terms.push_back(d);
            out.terms.push_back(s);
        }
    }
    trig_canonicalize(out);
    return out;
}

void trig_canonicalize(TrigPoly& p, double drop_tol) {
    std::map<std::array<int, kMaxDim>, std::pair<double, double>> merged;
    for (TrigTerm t : p.terms) {
        // flip into half-space: first nonzero frequency component positive
        int sign = 0;
        for (size_t i = 0; i < kMaxDim; ++i) {
            if (t.k[i] != 0) {
                sign = t.k[i] > 0 ? 1 : -1;
                break;
            }
        }
        if (sign < 0) {
            for (size_t i = 0; i < kMaxDim; ++i) t.k[i] = -t.k[i];
            t.s = -t.s;
        }
        if (sign == 0) t.s = 0.0;  // sin(0) contributes nothing
        auto& slot = merged[t.k];
        slot.first += t.c;
        slot.second += t.s;
    }
    p.terms.clear();
    for (const auto& [k, cs] : merged) {
        if (std::abs(cs.first) <= drop_tol && std::abs(cs.second) <= drop_tol) continue;
        TrigTerm t;
        t.k = k;
        t.c = cs.first;
        t.s = cs.second;
        p.terms.push_back(t);
    }
}

}  // namespace wres
