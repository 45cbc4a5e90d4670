#include "wres/metric.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

std::vector<double> MetricField::eval(const Vec& x) const {
    std::vector<double> m(static_cast<size_t>(dim * dim), 0.0);
    switch (kind) {
        case MetricKind::Flat:
            for (int i = 0; i < dim; ++i) m[static_cast<size_t>(i * dim + i)] = 1.0;
            break;
        case MetricKind::Conformal: {
            const double w = std::exp(2.0 * f.eval(x));
            for (int i = 0; i < dim; ++i) m[static_cast<size_t>(i * dim + i)] = w;
            break;
        }
        case MetricKind::General:
            for (size_t i = 0; i < m.size(); ++i) m[i] = g[i].eval(x);
            break;
    }
    return m;
}

double MetricField::det(const Vec& x) const {
    std::vector<double> m = eval(x);
    // in-place LU, dim <= 4
    double d = 1.0;
    for (int c = 0; c < dim; ++c) {
        int p = c;
        for (int r = c + 1; r < dim; ++r)
            if (std::abs(m[static_cast<size_t>(r * dim + c)]) >
                std::abs(m[static_cast<size_t>(p * dim + c)]))
                p = r;
        if (p != c) {
            for (int j = 0; j < dim; ++j)
                std::swap(m[static_cast<size_t>(p * dim + j)], m[static_cast<size_t>(c * dim + j)]);
            d = -d;
        }
        const double piv = m[static_cast<size_t>(c * dim + c)];
        if (piv == 0.0) return 0.0;
        d *= piv;
        for (int r = c + 1; r < dim; ++r) {
            const double fct = m[static_cast<size_t>(r * dim + c)] / piv;
            for (int j = c; j < dim; ++j)
                m[static_cast<size_t>(r * dim + j)] -= fct * m[static_cast<size_t>(c * dim + j)];
        }
    }
    return d;
}

double MetricField::sqrt_det(const Vec& x) const {
    const double d = det(x);
    if (d <= 0.0) throw SingularError("metric determinant not positive");
    return std::sqrt(d);
}

JetMatrix MetricField::jets(const Vec& x0, int order) const {
    JetMatrix out = jet_matrix_zero(dim, dim, order, x0);
    switch (kind) {
        case MetricKind::Flat:
            out = jet_matrix_identity(dim, dim, order, x0);
            break;
        case MetricKind::Conformal: {
            const Jet w = jet_exp(jet_scale(trig_jet(f, x0, order), 2.0));
            for (int i = 0; i < dim; ++i) out.at(i, i) = w;
            break;
        }
        case MetricKind::General:
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    out.at(i, j) = trig_jet(g[static_cast<size_t>(i * dim + j)], x0, order);
            break;
    }
    return out;
}

bool MetricField::depends_on(int axis) const {
    switch (kind) {
        case MetricKind::Flat:
            return false;
        case MetricKind::Conformal:
            return f.depends_on(axis);
        case MetricKind::General:
            for (const TrigPoly& e : g)
                if (e.depends_on(axis)) return true;
            return false;
    }
    return false;
}

MetricField flat_metric(int dim) {
    if (dim < 2 || dim > kMaxDim) throw InputError("metric dimension out of range");
    MetricField m;
    m.dim = dim;
    m.kind = MetricKind::Flat;
    return m;
}

MetricField conformal_metric(int dim, const TrigPoly& f) {
    if (dim < 2 || dim > kMaxDim) throw InputError("metric dimension out of range");
    if (f.dim != dim) throw InputError("conformal factor dimension mismatch");
    MetricField m;
    m.dim = dim;
    m.kind = MetricKind::Conformal;
    m.f = f;
    return m;
}

MetricField general_metric(int dim, const std::vector<TrigPoly>& entries) {
    if (dim < 2 || dim > kMaxDim) throw InputError("metric dimension out of range");
    if (entries.size() != static_cast<size_t>(dim * dim))
        throw InputError("general metric needs dim*dim entries");
    MetricField m;
    m.dim = dim;
    m.kind = MetricKind::General;
    m.g = entries;
    // symmetry check: g_ij and g_ji must agree as trig polys
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const TrigPoly diff = trig_add(entries[static_cast<size_t>(i * dim + j)],
                                           trig_scale(entries[static_cast<size_t>(j * dim + i)], -1.0));
            for (const TrigTerm& t : diff.terms)
                if (std::abs(t.c) > 1e-12 || std::abs(t.s) > 1e-12)
                    throw InputError("general metric entries not symmetric");
        }
    return m;
}

void symmetric_eigen_small(const std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                           std::vector<double>& eigenvectors) {
    std::vector<double> m = a;
    std::vector<double> v(static_cast<size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i * n + i)] = 1.0;
    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<size_t>(i * n + j)];
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(m, p, q) * at(m, p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(m, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(m, q, q) - at(m, p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double mp = at(m, p, k), mq = at(m, q, k);
                    at(m, p, k) = c * mp - s * mq;
                    at(m, q, k) = s * mp + c * mq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mp = at(m, k, p), mq = at(m, k, q);
                    at(m, k, p) = c * mp - s * mq;
                    at(m, k, q) = s * mp + c * mq;
                    const double vp = at(v, k, p), vq = at(v, k, q);
                    at(v, k, p) = c * vp - s * vq;
                    at(v, k, q) = s * vp + c * vq;
                }
            }
    }
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return m[static_cast<size_t>(i * n + i)] < m[static_cast<size_t>(j * n + j)];
    });
    eigenvalues.assign(static_cast<size_t>(n), 0.0);
    eigenvectors.assign(static_cast<size_t>(n * n), 0.0);
    for (int c = 0; c < n; ++c) {
        eigenvalues[static_cast<size_t>(c)] = m[static_cast<size_t>(idx[static_cast<size_t>(c)] * (n + 1))];
        for (int r = 0; r < n; ++r)
            eigenvectors[static_cast<size_t>(r * n + c)] = v[static_cast<size_t>(r * n + idx[static_cast<size_t>(c)])];
    }
}

double symmetric_min_eigenvalue(const std::vector<double>& a, int n) {
    std::vector<double> ev, evec;
    symmetric_eigen_small(a, n, ev, evec);
    return ev[0];
}

void validate_positive_definite(const MetricField& g, int grid_per_axis, double min_eigenvalue) {
    if (grid_per_axis < 1) throw InputError("validation grid must be positive");
    const int n = g.dim;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= grid_per_axis;
    const double h = kTwoPi / grid_per_axis;
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        Vec x = zero_vec(n);
        for (int i = 0; i < n; ++i) {
            x[i] = h * static_cast<double>(rem % grid_per_axis);
            rem /= grid_per_axis;
        }
        if (symmetric_min_eigenvalue(g.eval(x), n) <= min_eigenvalue)
            throw SingularError("metric not positive definite on validation grid");
    }
}

}  // namespace wres
