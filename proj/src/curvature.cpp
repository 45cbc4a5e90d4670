#include "wres/curvature.hpp"

namespace wres {

JetMatrix inverse_metric_jets(const MetricField& g, const Vec& x0, int order) {
    try {
        return jet_matrix_invert(g.jets(x0, order));
    } catch (const SingularError&) {
        throw SingularError("inverse_metric_jets: metric jets not invertible");
    }
}

std::vector<Jet> christoffel_jets(const MetricField& g, const Vec& x0, int order) {
    const int n = g.dim;
    const JetMatrix gj = g.jets(x0, order + 1);
    const JetMatrix ginv = inverse_metric_jets(g, x0, order);
    // dg[l][i][j] = d_l g_{ij} at order `order`
    std::vector<Jet> dg;
    dg.reserve(static_cast<size_t>(n * n * n));
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dg.push_back(jet_partial(gj.at(i, j), l));
    auto dg_at = [&](int l, int i, int j) -> const Jet& {
        return dg[static_cast<size_t>((l * n + i) * n + j)];
    };
    std::vector<Jet> gamma(static_cast<size_t>(n * n * n), jet_zero(n, order, x0));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Jet acc = jet_zero(n, order, x0);
                for (int l = 0; l < n; ++l) {
                    Jet bracket = jet_add(dg_at(i, l, j), dg_at(j, l, i));
                    bracket = jet_sub(bracket, dg_at(l, i, j));
                    acc = jet_add(acc, jet_multiply(ginv.at(k, l), bracket));
                }
                gamma[static_cast<size_t>((k * n + i) * n + j)] = jet_scale(acc, 0.5);
            }
    return gamma;
}

Jet scalar_curvature(const MetricField& g, const Vec& x0, int order) {
    if (order < 0) throw InputError("scalar_curvature: negative order");
    const int n = g.dim;
    const std::vector<Jet> gamma = christoffel_jets(g, x0, order + 1);
    auto gm = [&](int k, int i, int j) -> const Jet& {
        return gamma[static_cast<size_t>((k * n + i) * n + j)];
    };
    const JetMatrix ginv = inverse_metric_jets(g, x0, order);
    // Ricci_{ij} = d_k G^k_{ij} - d_i G^k_{kj} + G^k_{kl} G^l_{ij} - G^k_{il} G^l_{kj}
    Jet r = jet_zero(n, order, x0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Jet ric = jet_zero(n, order, x0);
            for (int k = 0; k < n; ++k) {
                ric = jet_add(ric, jet_partial(gm(k, i, j), k));
                ric = jet_sub(ric, jet_partial(gm(k, k, j), i));
                for (int l = 0; l < n; ++l) {
                    ric = jet_add(ric, jet_multiply(gm(k, k, l), gm(l, i, j)));
                    ric = jet_sub(ric, jet_multiply(gm(k, i, l), gm(l, k, j)));
                }
            }
            r = jet_add(r, jet_multiply(ginv.at(i, j), ric));
        }
    return r;
}

double scalar_curvature_value(const MetricField& g, const Vec& x0) {
    return scalar_curvature(g, x0, 0).value().real();
}

}  // namespace wres
