#include "wres/jet.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

namespace {

void check_compatible(const Jet& a, const Jet& b, const char* what) {
    if (a.dim != b.dim) throw InputError(std::string(what) + ": dimension mismatch");
    if (!(a.base == b.base)) throw InputError(std::string(what) + ": base point mismatch");
}

}  // namespace

cplx Jet::coefficient(const Mi& alpha) const {
    const int pos = jet_table(dim, order).position(alpha);
    if (pos < 0) return cplx{};
    return c[static_cast<size_t>(pos)];
}

double Jet::max_abs() const {
    double m = 0.0;
    for (const cplx& z : c) m = std::max(m, std::abs(z));
    return m;
}

Jet jet_zero(int dim, int order, const Vec& base) {
    if (order < 0) throw InputError("jet order must be non-negative");
    if (base.n != dim) throw InputError("jet base point dimension mismatch");
    Jet j;
    j.dim = dim;
    j.order = order;
    j.base = base;
    j.c.assign(jet_table(dim, order).size(), cplx{});
    return j;
}

Jet jet_constant(int dim, int order, const Vec& base, cplx value) {
    Jet j = jet_zero(dim, order, base);
    j.c[0] = value;
    return j;
}

Jet jet_coordinate(int dim, int order, const Vec& base, int axis) {
    if (order < 1) throw InputError("jet_coordinate requires order >= 1");
    Jet j = jet_constant(dim, order, base, base[axis]);
    const int pos = jet_table(dim, order).position(unit_mi(axis));
    j.c[static_cast<size_t>(pos)] = 1.0;
    return j;
}

Jet trig_jet(const TrigPoly& f, const Vec& x0, int order) {
    if (f.dim != x0.n) throw InputError("trig_jet: dimension mismatch");
    if (order < 0) throw InputError("trig_jet: negative order");
    Jet j = jet_zero(f.dim, order, x0);
    const JetTable& table = jet_table(f.dim, order);
    for (const TrigTerm& t : f.terms) {
        double phase = 0.0;
        for (int i = 0; i < f.dim; ++i) phase += t.k[static_cast<size_t>(i)] * x0[i];
        const double cp = std::cos(phase), sp = std::sin(phase);
        for (size_t idx = 0; idx < table.size(); ++idx) {
            const Mi& alpha = table.indices[idx];
            // apply d/dx_i alpha_i times: (c,s) -> k_i*(s,-c) per derivative
            double c = t.c, s = t.s;
            for (int i = 0; i < f.dim; ++i) {
                const double k = t.k[static_cast<size_t>(i)];
                for (int rep = 0; rep < alpha[static_cast<size_t>(i)]; ++rep) {
                    const double nc = k * s, ns = -k * c;
                    c = nc;
                    s = ns;
                }
            }
            const double deriv = c * cp + s * sp;
            j.c[idx] += deriv / mi_factorial(alpha);
        }
    }
    return j;
}

Jet jet_truncate(const Jet& a, int order) {
    if (order > a.order) throw InputError("jet_truncate: cannot raise order");
    if (order == a.order) return a;
    Jet j = jet_zero(a.dim, order, a.base);
    // graded-lex layout: lower-order table is a prefix of the higher one
    std::copy(a.c.begin(), a.c.begin() + static_cast<long>(j.c.size()), j.c.begin());
    return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
    check_compatible(a, b, "jet_add");
    const int order = std::min(a.order, b.order);
    Jet x = jet_truncate(a, order), y = jet_truncate(b, order);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    return x;
}

Jet jet_sub(const Jet& a, const Jet& b) { return jet_add(a, jet_scale(b, -1.0)); }

Jet jet_scale(const Jet& a, cplx factor) {
    Jet j = a;
    for (cplx& z : j.c) z *= factor;
    return j;
}

Jet jet_multiply(const Jet& a, const Jet& b) {
    check_compatible(a, b, "jet_multiply");
    const int order = std::min(a.order, b.order);
    const Jet x = jet_truncate(a, order), y = jet_truncate(b, order);
    Jet out = jet_zero(a.dim, order, a.base);
    for (const JetTable::Triple& t : jet_table(a.dim, order).products)
        out.c[static_cast<size_t>(t.dst)] +=
            x.c[static_cast<size_t>(t.a)] * y.c[static_cast<size_t>(t.b)];
    return out;
}

Jet jet_invert(const Jet& a, double unit_threshold) {
    if (std::abs(a.value()) < unit_threshold)
        throw SingularError("jet_invert: constant term below unit threshold");
    const JetTable& table = jet_table(a.dim, a.order);
    Jet b = jet_zero(a.dim, a.order, a.base);
    const cplx inv0 = 1.0 / a.c[0];
    b.c[0] = inv0;
    // triangular recursion in graded order:
    // b_gamma = -(1/a_0) * sum_{0 < alpha <= gamma} a_alpha b_{gamma-alpha}
    for (size_t gi = 1; gi < table.size(); ++gi) {
        const Mi& gamma = table.indices[gi];
        cplx acc{};
        for (size_t ai = 1; ai < table.size(); ++ai) {
            const Mi& alpha = table.indices[ai];
            Mi rest;
            bool ok = true;
            for (size_t d = 0; d < kMaxDim; ++d) {
                rest[d] = gamma[d] - alpha[d];
                if (rest[d] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            acc += a.c[ai] * b.c[static_cast<size_t>(table.position(rest))];
        }
        b.c[gi] = -inv0 * acc;
    }
    return b;
}

Jet jet_exp(const Jet& a) {
    // exp(a0) * sum_k (a - a0)^k / k!, nilpotent part terminates at order+1
    const cplx scale = std::exp(a.value());
    Jet nil = a;
    nil.c[0] = 0.0;
    Jet term = jet_constant(a.dim, a.order, a.base, 1.0);
    Jet sum = term;
    for (int k = 1; k <= a.order; ++k) {
        term = jet_scale(jet_multiply(term, nil), 1.0 / k);
        sum = jet_add(sum, term);
    }
    return jet_scale(sum, scale);
}

Jet jet_partial(const Jet& a, int axis) {
    if (axis < 0 || axis >= a.dim) throw InputError("jet_partial: axis out of range");
    if (a.order < 1) throw BudgetError("jet_partial: order-0 jet has no derivative data", 1);
    Jet out = jet_zero(a.dim, a.order - 1, a.base);
    const JetTable& src = jet_table(a.dim, a.order);
    const JetTable& dst = jet_table(a.dim, a.order - 1);
    for (size_t di = 0; di < dst.size(); ++di) {
        const Mi shifted = add_mi(dst.indices[di], unit_mi(axis));
        const int si = src.position(shifted);
        out.c[di] = static_cast<double>(dst.indices[di][static_cast<size_t>(axis)] + 1) *
                    a.c[static_cast<size_t>(si)];
    }
    return out;
}

}  // namespace wres
