#include "wres/laplacian.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

bool GeneralizedLaplacian::depends_on(int axis) const {
    if (metric.depends_on(axis)) return true;
    for (const TrigPoly& p : b)
        if (p.depends_on(axis)) return true;
    for (const TrigPoly& p : c)
        if (p.depends_on(axis)) return true;
    return false;
}

std::vector<int> GeneralizedLaplacian::dependent_axes() const {
    std::vector<int> axes;
    for (int i = 0; i < dim; ++i)
        if (depends_on(i)) axes.push_back(i);
    return axes;
}

GeneralizedLaplacian make_generalized_laplacian(const MetricField& metric, int rank,
                                                std::vector<TrigPoly> b, std::vector<TrigPoly> c) {
    if (rank < 1) throw InputError("operator rank must be >= 1");
    GeneralizedLaplacian lap;
    lap.dim = metric.dim;
    lap.rank = rank;
    lap.metric = metric;
    if (b.empty()) b.assign(static_cast<size_t>(metric.dim * rank * rank), trig_zero(metric.dim));
    if (c.empty()) c.assign(static_cast<size_t>(rank * rank), trig_zero(metric.dim));
    if (b.size() != static_cast<size_t>(metric.dim * rank * rank))
        throw InputError("first-order coefficient count mismatch");
    if (c.size() != static_cast<size_t>(rank * rank))
        throw InputError("zeroth-order coefficient count mismatch");
    lap.b = std::move(b);
    lap.c = std::move(c);
    return lap;
}

GeneralizedLaplacian flat_laplacian(int dim, int rank) {
    return make_generalized_laplacian(flat_metric(dim), rank, {}, {});
}

namespace {

// connection one-form omega_i recovered from the operator coefficients, as
// rank x rank jets of the requested order
std::vector<JetMatrix> recover_connection(const GeneralizedLaplacian& lap, const Vec& x0,
                                          int order) {
    const int n = lap.dim, r = lap.rank;
    const JetMatrix gj = lap.metric.jets(x0, order);
    const JetMatrix ginv = inverse_metric_jets(lap.metric, x0, order);
    const std::vector<Jet> gamma = christoffel_jets(lap.metric, x0, order);
    auto gm = [&](int k, int i, int j) -> const Jet& {
        return gamma[static_cast<size_t>((k * n + i) * n + j)];
    };
    std::vector<JetMatrix> omega;
    omega.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        JetMatrix acc = jet_matrix_zero(r, n, order, x0);
        for (int j = 0; j < n; ++j) {
            // b^j + g^{kl} Gamma_{kl}^j * Id
            JetMatrix bj = jet_matrix_zero(r, n, order, x0);
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q) bj.at(p, q) = trig_jet(lap.b_at(j, p, q), x0, order);
            Jet trace_gamma = jet_zero(n, order, x0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    trace_gamma = jet_add(trace_gamma, jet_multiply(ginv.at(k, l), gm(j, k, l)));
            bj = jet_matrix_add(bj, jet_matrix_scalar(trace_gamma, r));
            acc = jet_matrix_add(acc, jet_matrix_scale_jet(bj, gj.at(i, j)));
        }
        omega.push_back(jet_matrix_scale(acc, 0.5));
    }
    return omega;
}

}  // namespace

MatC weitzenbock_endomorphism(const GeneralizedLaplacian& lap, const Vec& x0) {
    const int n = lap.dim, r = lap.rank;
    const int order = 1;  // E needs one derivative of omega
    const std::vector<JetMatrix> omega = recover_connection(lap, x0, order);
    const JetMatrix ginv = inverse_metric_jets(lap.metric, x0, order);
    const std::vector<Jet> gamma = christoffel_jets(lap.metric, x0, order);
    auto gm = [&](int k, int i, int j) -> const Jet& {
        return gamma[static_cast<size_t>((k * n + i) * n + j)];
    };
    JetMatrix acc = jet_matrix_zero(r, n, 0, x0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            JetMatrix inner = jet_matrix_partial(omega[static_cast<size_t>(j)], i);
            inner = jet_matrix_add(
                inner, jet_matrix_truncate(
                           jet_matrix_multiply(omega[static_cast<size_t>(i)], omega[static_cast<size_t>(j)]), 0));
            for (int k = 0; k < n; ++k)
                inner = jet_matrix_sub(
                    inner, jet_matrix_truncate(
                               jet_matrix_scale_jet(omega[static_cast<size_t>(k)], gm(k, i, j)), 0));
            acc = jet_matrix_add(acc, jet_matrix_scale_jet(inner, jet_truncate(ginv.at(i, j), 0)));
        }
    MatC e = matc_zero(r);
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) e.at(p, q) = lap.c_at(p, q).eval(x0) - acc.at(p, q).value();
    return e;
}

namespace {

int auto_axis_grid(int max_freq, bool analytic) {
    if (max_freq == 0 && !analytic) return 1;
    // analytic factors e^{2f} etc. spread energy beyond the input band
    const int margin = analytic ? 16 : 4;
    int n = 2 * (2 * max_freq + margin);
    if (n < 8) n = 8;
    if (n > 64) n = 64;
    return n;
}

}  // namespace

GeneralizedLaplacian build_lichnerowicz(const MetricField& metric, int rank,
                                        const std::vector<TrigPoly>& omega,
                                        const FourierOptions& opts) {
    if (rank < 1) throw InputError("build_lichnerowicz: rank must be >= 1");
    const int n = metric.dim, r = rank;
    if (!omega.empty() && omega.size() != static_cast<size_t>(n * r * r))
        throw InputError("build_lichnerowicz: omega entry count mismatch");
    auto omega_at = [&](int axis, int i, int j) -> TrigPoly {
        if (omega.empty()) return trig_zero(n);
        return omega[static_cast<size_t>((axis * r + i) * r + j)];
    };

    // projection grid per axis
    std::array<int, kMaxDim> grid{1, 1, 1, 1};
    for (int axis = 0; axis < n; ++axis) {
        int max_freq = 0;
        bool analytic = metric.kind != MetricKind::Flat && metric.depends_on(axis);
        if (metric.kind == MetricKind::Conformal) max_freq = metric.f.max_frequency(axis);
        if (metric.kind == MetricKind::General)
            for (const TrigPoly& e : metric.g) max_freq = std::max(max_freq, e.max_frequency(axis));
        for (const TrigPoly& w : omega) max_freq = std::max(max_freq, w.max_frequency(axis));
        grid[static_cast<size_t>(axis)] = opts.grid[static_cast<size_t>(axis)] > 0
                                              ? opts.grid[static_cast<size_t>(axis)]
                                              : auto_axis_grid(max_freq, analytic);
    }

    // one pass over the grid filling every coefficient field, then projection
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<size_t>(grid[static_cast<size_t>(i)]);
    const size_t nb = static_cast<size_t>(n * r * r), nc = static_cast<size_t>(r * r);
    std::vector<std::vector<double>> bvals(nb, std::vector<double>(total));
    std::vector<std::vector<double>> cvals(nc, std::vector<double>(total));

#pragma omp parallel for schedule(dynamic, 16)
    for (long long li = 0; li < static_cast<long long>(total); ++li) {
        const size_t idx = static_cast<size_t>(li);
        size_t rem = idx;
        Vec x = zero_vec(n);
        for (int i = 0; i < n; ++i) {
            const size_t ni = static_cast<size_t>(grid[static_cast<size_t>(i)]);
            x[i] = kTwoPi * static_cast<double>(rem % ni) / static_cast<double>(ni);
            rem /= ni;
        }
        const JetMatrix ginv_j = inverse_metric_jets(metric, x, 0);
        const std::vector<Jet> gamma = christoffel_jets(metric, x, 0);
        auto gm = [&](int k, int i, int j) {
            return gamma[static_cast<size_t>((k * n + i) * n + j)].value().real();
        };
        auto ginv = [&](int i, int j) { return ginv_j.at(i, j).value().real(); };
        const double rcur = metric.kind == MetricKind::Flat ? 0.0 : scalar_curvature_value(metric, x);

        // omega values and their exact derivatives at x
        auto wval = [&](int axis, int i, int j) { return omega_at(axis, i, j).eval(x); };

        for (int k = 0; k < n; ++k) {
            double trace_gamma = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) trace_gamma += ginv(i, j) * gm(k, i, j);
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q) {
                    double v = 0.0;
                    for (int j = 0; j < n; ++j) v += 2.0 * ginv(k, j) * wval(j, p, q);
                    if (p == q) v -= trace_gamma;
                    bvals[static_cast<size_t>((k * r + p) * r + q)][idx] = v;
                }
        }
        for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q) {
                double v = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double inner = omega_at(j, p, q).derivative(i).eval(x);
                        for (int m = 0; m < r; ++m) inner += wval(i, p, m) * wval(j, m, q);
                        for (int k = 0; k < n; ++k) inner -= gm(k, i, j) * wval(k, p, q);
                        v += ginv(i, j) * inner;
                    }
                if (p == q) v -= rcur / 4.0;  // E = -r/4 * Id
                cvals[static_cast<size_t>(p * r + q)][idx] = v;
            }
    }

    std::vector<TrigPoly> b, c;
    b.reserve(nb);
    c.reserve(nc);
    for (const auto& v : bvals)
        b.push_back(project_samples_to_trig(v, n, grid, opts.tail_tol, opts.drop_tol));
    for (const auto& v : cvals)
        c.push_back(project_samples_to_trig(v, n, grid, opts.tail_tol, opts.drop_tol));
    return make_generalized_laplacian(metric, rank, std::move(b), std::move(c));
}

GeneralizedLaplacian laplace_beltrami(const MetricField& metric, const FourierOptions& opts) {
    const int n = metric.dim;
    if (metric.kind == MetricKind::Flat) return flat_laplacian(n, 1);

    std::array<int, kMaxDim> grid{1, 1, 1, 1};
    for (int axis = 0; axis < n; ++axis) {
        int max_freq = 0;
        if (metric.kind == MetricKind::Conformal) max_freq = metric.f.max_frequency(axis);
        if (metric.kind == MetricKind::General)
            for (const TrigPoly& e : metric.g) max_freq = std::max(max_freq, e.max_frequency(axis));
        grid[static_cast<size_t>(axis)] =
            opts.grid[static_cast<size_t>(axis)] > 0
                ? opts.grid[static_cast<size_t>(axis)]
                : auto_axis_grid(max_freq, metric.depends_on(axis));
    }

    // b^j = -(g^{ik} Gamma_{ik}^j), the divergence part of the Laplace-Beltrami
    // operator in local coordinates
    std::vector<TrigPoly> b;
    for (int j = 0; j < n; ++j) {
        b.push_back(project_to_trig(
            [&](const Vec& x) {
                const JetMatrix ginv = inverse_metric_jets(metric, x, 0);
                const std::vector<Jet> gamma = christoffel_jets(metric, x, 0);
                double v = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k)
                        v -= ginv.at(i, k).value().real() *
                             gamma[static_cast<size_t>((j * n + i) * n + k)].value().real();
                return v;
            },
            n, grid, opts.tail_tol, opts.drop_tol));
    }
    return make_generalized_laplacian(metric, 1, std::move(b), {});
}

std::vector<TrigPoly> random_connection(int dim, int rank, double amplitude, uint64_t seed,
                                        const std::vector<int>& axes) {
    Rng rng(seed);
    std::vector<TrigPoly> omega;
    omega.reserve(static_cast<size_t>(dim * rank * rank));
    // candidate modes: single frequencies along the chosen axes plus one mixed
    std::vector<std::array<int, kMaxDim>> modes;
    for (int a : axes) {
        std::array<int, kMaxDim> k{};
        k[static_cast<size_t>(a)] = 1;
        modes.push_back(k);
    }
    if (axes.size() >= 2) {
        std::array<int, kMaxDim> k{};
        k[static_cast<size_t>(axes[0])] = 1;
        k[static_cast<size_t>(axes[1])] = 1;
        modes.push_back(k);
    }
    for (int axis = 0; axis < dim; ++axis)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                TrigPoly p = trig_zero(dim);
                for (const auto& k : modes) {
                    const double c = amplitude * rng.uniform(-1.0, 1.0);
                    const double s = amplitude * rng.uniform(-1.0, 1.0);
                    p = trig_add(p, trig_mode(dim, k, c, s));
                }
                omega.push_back(p);
            }
    return omega;
}

}  // namespace wres
