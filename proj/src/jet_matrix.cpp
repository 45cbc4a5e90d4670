#include "wres/jet_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

MatC matc_zero(int rank) {
    MatC m;
    m.rank = rank;
    m.a.assign(static_cast<size_t>(rank * rank), cplx{});
    return m;
}

MatC matc_identity(int rank) {
    MatC m = matc_zero(rank);
    for (int i = 0; i < rank; ++i) m.at(i, i) = 1.0;
    return m;
}

MatC matc_add(const MatC& x, const MatC& y) {
    MatC r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

MatC matc_sub(const MatC& x, const MatC& y) {
    MatC r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

MatC matc_scale(const MatC& x, cplx f) {
    MatC r = x;
    for (cplx& z : r.a) z *= f;
    return r;
}

MatC matc_multiply(const MatC& x, const MatC& y) {
    MatC r = matc_zero(x.rank);
    for (int i = 0; i < x.rank; ++i)
        for (int k = 0; k < x.rank; ++k) {
            const cplx v = x.at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < x.rank; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

cplx matc_trace(const MatC& x) {
    cplx t{};
    for (int i = 0; i < x.rank; ++i) t += x.at(i, i);
    return t;
}

double matc_max_abs(const MatC& x) {
    double m = 0.0;
    for (const cplx& z : x.a) m = std::max(m, std::abs(z));
    return m;
}

MatC matc_invert(const MatC& x, double tol) {
    const int n = x.rank;
    MatC a = x;
    MatC inv = matc_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a.at(r, col)) > best) {
                best = std::abs(a.at(r, col));
                pivot = r;
            }
        }
        if (best < tol) throw SingularError("matc_invert: matrix singular to tolerance");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const cplx d = 1.0 / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = a.at(r, col);
            if (f == cplx{}) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

int JetMatrix::min_order() const {
    int o = m.empty() ? 0 : m[0].order;
    for (const Jet& j : m) o = std::min(o, j.order);
    return o;
}

MatC JetMatrix::value() const {
    MatC v = matc_zero(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) v.at(i, j) = at(i, j).value();
    return v;
}

double JetMatrix::max_abs() const {
    double v = 0.0;
    for (const Jet& j : m) v = std::max(v, j.max_abs());
    return v;
}

JetMatrix jet_matrix_zero(int rank, int dim, int order, const Vec& base) {
    JetMatrix x;
    x.rank = rank;
    x.dim = dim;
    x.base = base;
    x.m.assign(static_cast<size_t>(rank * rank), jet_zero(dim, order, base));
    return x;
}

JetMatrix jet_matrix_identity(int rank, int dim, int order, const Vec& base) {
    JetMatrix x = jet_matrix_zero(rank, dim, order, base);
    for (int i = 0; i < rank; ++i) x.at(i, i) = jet_constant(dim, order, base, 1.0);
    return x;
}

JetMatrix jet_matrix_scalar(const Jet& j, int rank) {
    JetMatrix x = jet_matrix_zero(rank, j.dim, j.order, j.base);
    for (int i = 0; i < rank; ++i) x.at(i, i) = j;
    return x;
}

JetMatrix jet_matrix_add(const JetMatrix& x, const JetMatrix& y) {
    JetMatrix r = x;
    for (size_t i = 0; i < r.m.size(); ++i) r.m[i] = jet_add(x.m[i], y.m[i]);
    return r;
}

JetMatrix jet_matrix_sub(const JetMatrix& x, const JetMatrix& y) {
    JetMatrix r = x;
    for (size_t i = 0; i < r.m.size(); ++i) r.m[i] = jet_sub(x.m[i], y.m[i]);
    return r;
}

JetMatrix jet_matrix_scale(const JetMatrix& x, cplx f) {
    JetMatrix r = x;
    for (Jet& j : r.m) j = jet_scale(j, f);
    return r;
}

JetMatrix jet_matrix_scale_jet(const JetMatrix& x, const Jet& f) {
    JetMatrix r = x;
    for (Jet& j : r.m) j = jet_multiply(j, f);
    return r;
}

JetMatrix jet_matrix_multiply(const JetMatrix& x, const JetMatrix& y) {
    if (x.rank != y.rank) throw InputError("jet_matrix_multiply: rank mismatch");
    const int order = std::min(x.min_order(), y.min_order());
    JetMatrix r = jet_matrix_zero(x.rank, x.dim, order, x.base);
    for (int i = 0; i < x.rank; ++i)
        for (int k = 0; k < x.rank; ++k)
            for (int j = 0; j < x.rank; ++j)
                r.at(i, j) = jet_add(r.at(i, j), jet_multiply(x.at(i, k), y.at(k, j)));
    return r;
}

JetMatrix jet_matrix_partial(const JetMatrix& x, int axis) {
    JetMatrix r = x;
    for (Jet& j : r.m) j = jet_partial(j, axis);
    return r;
}

JetMatrix jet_matrix_truncate(const JetMatrix& x, int order) {
    JetMatrix r = x;
    for (Jet& j : r.m) j = jet_truncate(j, order);
    return r;
}

Jet jet_matrix_trace(const JetMatrix& x) {
    Jet t = jet_zero(x.dim, x.min_order(), x.base);
    for (int i = 0; i < x.rank; ++i) t = jet_add(t, x.at(i, i));
    return t;
}

JetMatrix jet_matrix_invert(const JetMatrix& x, double tol) {
    const int order = x.min_order();
    const JetMatrix a = jet_matrix_truncate(x, order);
    MatC inv0;
    try {
        inv0 = matc_invert(a.value(), tol);
    } catch (const SingularError&) {
        throw SingularError("jet_matrix_invert: constant-term matrix singular");
    }
    // B = inv0, E = I - B*A has nilpotent jets; inverse = (sum_k E^k) * B
    JetMatrix b = jet_matrix_zero(x.rank, x.dim, order, x.base);
    for (int i = 0; i < x.rank; ++i)
        for (int j = 0; j < x.rank; ++j)
            b.at(i, j) = jet_constant(x.dim, order, x.base, inv0.at(i, j));
    const JetMatrix e =
        jet_matrix_sub(jet_matrix_identity(x.rank, x.dim, order, x.base), jet_matrix_multiply(b, a));
    JetMatrix term = jet_matrix_identity(x.rank, x.dim, order, x.base);
    JetMatrix series = term;
    for (int k = 1; k <= order; ++k) {
        term = jet_matrix_multiply(term, e);
        series = jet_matrix_add(series, term);
    }
    return jet_matrix_multiply(series, b);
}

}  // namespace wres
