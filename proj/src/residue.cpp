#include "wres/residue.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "wres/gamma.hpp"
#include "wres/metric.hpp"
#include "wres/parallel.hpp"

namespace wres {

namespace {

// dense polynomial in eta over multi-indices of degree <= max_deg
struct DensePoly {
    const JetTable* table;
    std::vector<cplx> c;
};

CosphereIntegral exact_monomial_path(const GradedSymbol& symbol, int n) {
    const SymbolComponent* comp = symbol.component(-n);
    CosphereIntegral out;
    if (comp == nullptr || comp->terms.empty()) return out;
    out.has_component = true;
    if (symbol.qform == nullptr)
        throw InputError("cosphere_trace_integral: rational component without quadratic form");

    std::vector<double> eigenvalues, eigenvectors;
    symmetric_eigen_small(symbol.qform->value(), n, eigenvalues, eigenvectors);
    if (eigenvalues[0] <= 0.0)
        throw SingularError("cosphere_trace_integral: quadratic form not positive definite");
    // L = U diag(d^{-1/2}) U^T so that L^T G L = I
    std::vector<double> l(static_cast<size_t>(n * n), 0.0);
    double det_l = 1.0;
    for (int k = 0; k < n; ++k) det_l /= std::sqrt(eigenvalues[static_cast<size_t>(k)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int k = 0; k < n; ++k)
                v += eigenvectors[static_cast<size_t>(i * n + k)] *
                     eigenvectors[static_cast<size_t>(j * n + k)] /
                     std::sqrt(eigenvalues[static_cast<size_t>(k)]);
            l[static_cast<size_t>(i * n + j)] = v;
        }

    int max_deg = 0;
    for (const auto& [key, coeff] : comp->terms) max_deg = std::max(max_deg, mi_degree(key.beta));
    const JetTable& table = jet_table(n, max_deg);
    std::vector<cplx> acc(table.size(), cplx{});

    std::vector<cplx> poly(table.size()), next(table.size());
    for (const auto& [key, coeff] : comp->terms) {
        const cplx trace = matc_trace(coeff.value());
        if (trace == cplx{}) continue;
        // expand (L eta)^beta = prod_i (sum_j L_ij eta_j)^{beta_i}
        std::fill(poly.begin(), poly.end(), cplx{});
        poly[0] = 1.0;
        int degree = 0;
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < key.beta[static_cast<size_t>(i)]; ++rep) {
                std::fill(next.begin(), next.end(), cplx{});
                for (size_t idx = 0; idx < table.size(); ++idx) {
                    if (mi_degree(table.indices[idx]) > degree) break;
                    const cplx v = poly[idx];
                    if (v == cplx{}) continue;
                    for (int j = 0; j < n; ++j) {
                        const double lij = l[static_cast<size_t>(i * n + j)];
                        if (lij == 0.0) continue;
                        const int dst = table.position(add_mi(table.indices[idx], unit_mi(j)));
                        next[static_cast<size_t>(dst)] += v * lij;
                    }
                }
                std::swap(poly, next);
                ++degree;
            }
        }
        for (size_t idx = 0; idx < table.size(); ++idx) acc[idx] += trace * poly[idx];
    }

    cplx total{};
    for (size_t idx = 0; idx < table.size(); ++idx) {
        if (acc[idx] == cplx{}) continue;
        total += acc[idx] * sphere_monomial_integral(table.indices[idx], n);
    }
    out.value = total * det_l;
    return out;
}

CosphereIntegral gauss_product_path(const GradedSymbol& symbol, int n, int gauss_points) {
    const SymbolComponent* comp = symbol.component(-n);
    CosphereIntegral out;
    if (comp == nullptr || comp->terms.empty()) return out;
    out.has_component = true;
    cplx acc{};
    for (const SpherePoint& p : sphere_quadrature(n, gauss_points))
        acc += p.weight * matc_trace(evaluate_component(symbol, -n, p.eta));
    out.value = acc;
    return out;
}

}  // namespace

CosphereIntegral cosphere_trace_integral(const GradedSymbol& symbol, int n, SphereRule rule,
                                         int gauss_points) {
    if (symbol.dim != n) throw InputError("cosphere_trace_integral: dimension mismatch");
    return rule == SphereRule::ExactMonomial ? exact_monomial_path(symbol, n)
                                             : gauss_product_path(symbol, n, gauss_points);
}

ResidueResult wodzicki_residue_of(const SymbolFactory& factory, int dim,
                                  const std::vector<int>& axes, const Numerics& numerics) {
    const int n = dim;
    const int grid = numerics.x_grid_for(n);
    const int n_axes = static_cast<int>(axes.size());
    size_t total = 1;
    for (int i = 0; i < n_axes; ++i) total *= static_cast<size_t>(grid);
    const double h = kTwoPi / grid;

    std::vector<cplx> buf;
    std::vector<Vec> points(total);
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        Vec x = zero_vec(n);
        for (int i = 0; i < n_axes; ++i) {
            x[axes[static_cast<size_t>(i)]] = h * static_cast<double>(rem % static_cast<size_t>(grid));
            rem /= static_cast<size_t>(grid);
        }
        points[idx] = x;
    }

    std::atomic<bool> missing_component{false};
    auto eval_point = [&](size_t idx) -> cplx {
        const GradedSymbol sym = factory(points[idx]);
        const CosphereIntegral ci =
            cosphere_trace_integral(sym, n, numerics.sphere_rule, numerics.gauss_points);
        if (!ci.has_component) missing_component.store(true, std::memory_order_relaxed);
        return ci.value;
    };
    if (numerics.exec == par::Exec::Parallel)
        par::fill_buffer_parallel(buf, total, eval_point);
    else
        par::fill_buffer_serial(buf, total, eval_point);

    const cplx sum = par::pairwise_sum(std::span<const cplx>(buf));
    // trapezoid over dependent axes, exact 2pi factors along the rest
    const double measure =
        std::pow(h, n_axes) * std::pow(kTwoPi, n - n_axes) * std::pow(kTwoPi, -n);
    const cplx res = sum * measure;

    ResidueResult out;
    out.value = res.real();
    out.imaginary_leak = std::abs(res.imag());
    out.x_grid = grid;
    out.rule = numerics.sphere_rule;
    out.has_component = !missing_component;
    out.valid = out.imaginary_leak <= 1e-9 * std::max(1.0, std::abs(out.value));
    out.per_point_density.reserve(total);
    for (size_t idx = 0; idx < total; ++idx) out.per_point_density.emplace_back(points[idx], buf[idx]);
    return out;
}

ResidueResult wodzicki_residue(const GeneralizedLaplacian& lap, int m, const Numerics& numerics) {
    if (m < 1) throw InputError("wodzicki_residue: power must be >= 1");
    const int n = lap.dim;
    if (2 * m > n) {
        // the symbol of Delta^{-m} has no order-(-n) component; residue is 0
        ResidueResult out;
        out.x_grid = numerics.x_grid_for(n);
        out.rule = numerics.sphere_rule;
        out.has_component = false;
        return out;
    }
    const int jet_order = numerics.jet_order_for(n);
    const SymbolFactory factory = [&lap, m, n, jet_order](const Vec& x) {
        return negative_power_symbol(lap, m, x, -n, jet_order);
    };
    return wodzicki_residue_of(factory, n, lap.dependent_axes(), numerics);
}

double kw_normalization_factor(int n) {
    // (2pi)^n / vol(S^{n-1}) = 2^{n-1} pi^{n/2} Gamma(n/2)
    return std::pow(2.0, n - 1) * std::pow(M_PI, 0.5 * n) * gamma_value(0.5 * n);
}

double kw_normalized_residue(const GeneralizedLaplacian& lap, int m, const Numerics& numerics) {
    const ResidueResult res = wodzicki_residue(lap, m, numerics);
    if (!res.valid) throw NumericError("kw_normalized_residue: imaginary leak above threshold");
    return kw_normalization_factor(lap.dim) * res.value;
}

}  // namespace wres
