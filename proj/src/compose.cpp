#include "wres/compose.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// cache of repeated single-axis derivatives indexed by multi-index
struct DerivativeCache {
    std::map<std::pair<int, Mi>, SymbolComponent> entries;

    const SymbolComponent& get(const GradedSymbol& sym, int order, const Mi& alpha, bool xi_side) {
        const auto key = std::make_pair(order, alpha);
        auto it = entries.find(key);
        if (it != entries.end()) return it->second;
        if (mi_degree(alpha) == 0) {
            const SymbolComponent* c = sym.component(order);
            SymbolComponent base;
            base.order = order;
            if (c != nullptr) base = *c;
            return entries.emplace(key, std::move(base)).first->second;
        }
        int axis = 0;
        while (alpha[static_cast<size_t>(axis)] == 0) ++axis;
        Mi parent = alpha;
        parent[static_cast<size_t>(axis)] -= 1;
        const SymbolComponent& prev = get(sym, order, parent, xi_side);
        SymbolComponent next = xi_side
                                   ? component_xi_derivative(prev, axis, sym.qform.get())
                                   : component_x_derivative(prev, axis, sym.qform.get());
        return entries.emplace(key, std::move(next)).first->second;
    }
};

void check_compose_inputs(const GradedSymbol& a, const GradedSymbol& b) {
    if (a.dim != b.dim || a.rank != b.rank) throw InputError("compose: dimension/rank mismatch");
    if (!(a.base == b.base)) throw InputError("compose: base point mismatch");
    if (a.qform && b.qform && !a.qform->same_as(*b.qform))
        throw InputError("compose: incompatible quadratic forms");
}

void validate_budget(const GradedSymbol& a, const GradedSymbol& b, int cutoff) {
    int deficit = 0;
    for (const auto& [s, comp] : b.comps) {
        if (comp.terms.empty()) continue;
        const int max_alpha = a.max_order + s - cutoff;
        if (max_alpha <= 0) continue;
        const int have = comp.min_jet_order();
        deficit = std::max(deficit, max_alpha - have);
    }
    if (deficit > 0)
        throw BudgetError("compose: jet budget insufficient for cutoff " + std::to_string(cutoff) +
                              "; increase jet_order by " + std::to_string(deficit),
                          deficit);
}

}  // namespace

GradedSymbol laplacian_symbol(const GeneralizedLaplacian& lap, const Vec& x0, int jet_order) {
    const int n = lap.dim, r = lap.rank;
    if (x0.n != n) throw InputError("laplacian_symbol: base point dimension mismatch");
    GradedSymbol sym;
    sym.base = x0;
    sym.dim = n;
    sym.rank = r;
    sym.max_order = 2;
    sym.cutoff = 0;
    sym.qform = make_quadratic_form(inverse_metric_jets(lap.metric, x0, jet_order));
    sym.scalar_principal = true;

    SymbolComponent s2;
    s2.order = 2;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double mult = (i == j) ? 1.0 : 2.0;
            const Jet& gij = sym.qform->at(i, j);
            if (gij.max_abs() == 0.0) continue;
            component_add_term(s2, add_mi(unit_mi(i), unit_mi(j)), 0,
                               jet_matrix_scale(jet_matrix_scalar(gij, r), mult));
        }
    sym.comps.emplace(2, std::move(s2));

    SymbolComponent s1;
    s1.order = 1;
    for (int axis = 0; axis < n; ++axis) {
        JetMatrix coeff = jet_matrix_zero(r, n, jet_order, x0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) coeff.at(i, j) = trig_jet(lap.b_at(axis, i, j), x0, jet_order);
        if (coeff.max_abs() == 0.0) continue;
        component_add_term(s1, unit_mi(axis), 0, jet_matrix_scale(coeff, -kI));
    }
    sym.comps.emplace(1, std::move(s1));

    SymbolComponent s0;
    s0.order = 0;
    JetMatrix czero = jet_matrix_zero(r, n, jet_order, x0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) czero.at(i, j) = trig_jet(lap.c_at(i, j), x0, jet_order);
    if (czero.max_abs() != 0.0) component_add_term(s0, zero_mi(), 0, jet_matrix_scale(czero, -1.0));
    sym.comps.emplace(0, std::move(s0));
    return sym;
}

GradedSymbol first_order_symbol(int dim, int rank, const Vec& x0,
                                const std::vector<TrigPoly>& a_first,
                                const std::vector<TrigPoly>& a_zero, int jet_order) {
    if (a_first.size() != static_cast<size_t>(dim * rank * rank))
        throw InputError("first_order_symbol: coefficient count mismatch");
    GradedSymbol sym;
    sym.base = x0;
    sym.dim = dim;
    sym.rank = rank;
    sym.max_order = 1;
    sym.cutoff = 0;
    SymbolComponent s1;
    s1.order = 1;
    for (int axis = 0; axis < dim; ++axis) {
        JetMatrix coeff = jet_matrix_zero(rank, dim, jet_order, x0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                coeff.at(i, j) =
                    trig_jet(a_first[static_cast<size_t>((axis * rank + i) * rank + j)], x0, jet_order);
        if (coeff.max_abs() == 0.0) continue;
        component_add_term(s1, unit_mi(axis), 0, coeff);
    }
    sym.comps.emplace(1, std::move(s1));
    SymbolComponent s0;
    s0.order = 0;
    if (!a_zero.empty()) {
        if (a_zero.size() != static_cast<size_t>(rank * rank))
            throw InputError("first_order_symbol: zero-order coefficient count mismatch");
        JetMatrix coeff = jet_matrix_zero(rank, dim, jet_order, x0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                coeff.at(i, j) = trig_jet(a_zero[static_cast<size_t>(i * rank + j)], x0, jet_order);
        if (coeff.max_abs() != 0.0) component_add_term(s0, zero_mi(), 0, coeff);
    }
    sym.comps.emplace(0, std::move(s0));
    return sym;
}

GradedSymbol identity_symbol(int dim, int rank, const Vec& x0, int jet_order) {
    GradedSymbol sym;
    sym.base = x0;
    sym.dim = dim;
    sym.rank = rank;
    sym.max_order = 0;
    sym.cutoff = 0;
    SymbolComponent s0;
    s0.order = 0;
    component_add_term(s0, zero_mi(), 0, jet_matrix_identity(rank, dim, jet_order, x0));
    sym.comps.emplace(0, std::move(s0));
    return sym;
}

GradedSymbol compose(const GradedSymbol& a, const GradedSymbol& b, int cutoff) {
    check_compose_inputs(a, b);
    if (cutoff > a.max_order + b.max_order) {
        GradedSymbol empty;
        empty.base = a.base;
        empty.dim = a.dim;
        empty.rank = a.rank;
        empty.max_order = cutoff;
        empty.cutoff = cutoff;
        empty.qform = a.qform ? a.qform : b.qform;
        return empty;
    }
    validate_budget(a, b, cutoff);

    GradedSymbol out;
    out.base = a.base;
    out.dim = a.dim;
    out.rank = a.rank;
    out.max_order = a.max_order + b.max_order;
    out.cutoff = cutoff;
    out.qform = a.qform ? a.qform : b.qform;

    DerivativeCache da, db;
    const int max_alpha = out.max_order - cutoff;
    const std::vector<Mi> alphas = enumerate_multi_indices(a.dim, std::max(0, max_alpha));
    for (const Mi& alpha : alphas) {
        const int deg = mi_degree(alpha);
        const cplx scale = i_power(-deg & 3 ? (4 - (deg & 3)) : 0) / mi_factorial(alpha);
        for (const auto& [p, comp_a] : a.comps) {
            if (comp_a.terms.empty()) continue;
            for (const auto& [s, comp_b] : b.comps) {
                if (comp_b.terms.empty()) continue;
                const int m = p + s - deg;
                if (m < cutoff || m > out.max_order) continue;
                const SymbolComponent& dxa = da.get(a, p, alpha, /*xi_side=*/true);
                if (dxa.terms.empty()) continue;
                const SymbolComponent& dxb = db.get(b, s, alpha, /*xi_side=*/false);
                if (dxb.terms.empty()) continue;
                SymbolComponent prod = component_multiply(dxa, dxb);
                prod = component_scale(prod, scale);
                auto it = out.comps.find(m);
                if (it == out.comps.end())
                    out.comps.emplace(m, std::move(prod));
                else
                    it->second = component_add(it->second, prod);
            }
        }
    }
    // ensure every order in [cutoff, max_order] exists, even if zero
    for (int m = cutoff; m <= out.max_order; ++m) {
        if (!out.comps.count(m)) {
            SymbolComponent empty;
            empty.order = m;
            out.comps.emplace(m, std::move(empty));
        }
    }
    return out;
}

GradedSymbol parametrix(const GradedSymbol& sym, int cutoff) {
    if (cutoff > -2) throw InputError("parametrix: cutoff must be <= -2");
    if (sym.max_order != 2 || sym.qform == nullptr)
        throw InputError("parametrix: expected a second-order symbol with quadratic form");
    // verify sigma_2 == Q * Id
    {
        const SymbolComponent* s2 = sym.component(2);
        if (s2 == nullptr) throw InputError("parametrix: missing principal component");
        SymbolComponent expected;
        expected.order = 2;
        for (int i = 0; i < sym.dim; ++i)
            for (int j = i; j < sym.dim; ++j) {
                const double mult = (i == j) ? 1.0 : 2.0;
                const Jet& gij = sym.qform->at(i, j);
                if (gij.max_abs() == 0.0) continue;
                component_add_term(expected, add_mi(unit_mi(i), unit_mi(j)), 0,
                                   jet_matrix_scale(jet_matrix_scalar(gij, sym.rank), mult));
            }
        const SymbolComponent diff = component_add(*s2, component_scale(expected, -1.0));
        if (diff.max_abs() > 1e-10 * std::max(1.0, s2->max_abs()))
            throw InputError("parametrix: principal symbol is not scalar Q * Id");
    }

    const int jet_order = sym.qform->g[0].order;
    GradedSymbol q;
    q.base = sym.base;
    q.dim = sym.dim;
    q.rank = sym.rank;
    q.max_order = -2;
    q.cutoff = cutoff;
    q.qform = sym.qform;
    {
        SymbolComponent lead;
        lead.order = -2;
        component_add_term(lead, zero_mi(), 1,
                           jet_matrix_identity(sym.rank, sym.dim, jet_order, sym.base));
        q.comps.emplace(-2, std::move(lead));
    }

    DerivativeCache dq, ds;
    const int steps = -2 - cutoff;
    for (int j = 1; j <= steps; ++j) {
        SymbolComponent rhs;
        rhs.order = -j;
        for (int l = 0; l < j; ++l) {
            for (int s = 0; s <= 2; ++s) {
                const int deg = j - l - 2 + s;
                if (deg < 0) continue;
                const SymbolComponent* sig = sym.component(s);
                if (sig == nullptr || sig->terms.empty()) continue;
                if (deg > 0 && sig->min_jet_order() < deg)
                    throw BudgetError(
                        "parametrix: jet budget insufficient; increase jet_order by " +
                            std::to_string(deg - sig->min_jet_order()),
                        deg - sig->min_jet_order());
                for (const Mi& alpha : enumerate_multi_indices(sym.dim, deg)) {
                    if (mi_degree(alpha) != deg) continue;
                    const SymbolComponent& dxa = dq.get(q, -2 - l, alpha, /*xi_side=*/true);
                    if (dxa.terms.empty()) continue;
                    const SymbolComponent& dxb = ds.get(sym, s, alpha, /*xi_side=*/false);
                    if (dxb.terms.empty()) continue;
                    const cplx scale = i_power((4 - (deg & 3)) & 3) / mi_factorial(alpha);
                    SymbolComponent prod = component_scale(component_multiply(dxa, dxb), scale);
                    rhs = component_add(rhs, prod);
                }
            }
        }
        // q_{-2-j} = -Q^{-1} * rhs; register before derivatives of it are taken
        SymbolComponent next = component_divide_by_q(component_scale(rhs, -1.0));
        q.comps.emplace(-2 - j, std::move(next));
        q.cutoff = -2 - j;
    }
    q.cutoff = cutoff;
    return q;
}

GradedSymbol negative_power_symbol(const GeneralizedLaplacian& lap, int m, const Vec& x0,
                                   int cutoff, int jet_order) {
    if (m < 1) throw InputError("negative_power_symbol: power must be >= 1");
    if (cutoff > -2 * m) throw InputError("negative_power_symbol: cutoff must be <= -2m");
    const GradedSymbol sym = laplacian_symbol(lap, x0, jet_order);
    const GradedSymbol base = parametrix(sym, cutoff + 2 * (m - 1));
    GradedSymbol result = base;
    for (int k = 2; k <= m; ++k) result = compose(result, base, cutoff + 2 * (m - k));
    return result;
}

}  // namespace wres
