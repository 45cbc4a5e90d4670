#include "wres/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wres {

std::vector<double> QuadraticForm::value() const {
    std::vector<double> v(static_cast<size_t>(dim * dim));
    for (size_t i = 0; i < v.size(); ++i) v[i] = g[i].value().real();
    return v;
}

double QuadraticForm::eval(const Vec& xi) const {
    double q = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) q += at(i, j).value().real() * xi[i] * xi[j];
    return q;
}

bool QuadraticForm::same_as(const QuadraticForm& other, double tol) const {
    if (dim != other.dim || !(base == other.base)) return false;
    for (size_t e = 0; e < g.size(); ++e) {
        const Jet& a = g[e];
        const Jet& b = other.g[e];
        const size_t m = std::min(a.c.size(), b.c.size());
        for (size_t i = 0; i < m; ++i)
            if (std::abs(a.c[i] - b.c[i]) > tol) return false;
    }
    return true;
}

std::shared_ptr<const QuadraticForm> make_quadratic_form(const JetMatrix& inv) {
    auto q = std::make_shared<QuadraticForm>();
    q->dim = inv.rank;
    q->base = inv.base;
    q->g = inv.m;
    return q;
}

int SymbolComponent::min_jet_order() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [key, coeff] : terms) m = std::min(m, coeff.min_order());
    return m;
}

double SymbolComponent::max_abs() const {
    double m = 0.0;
    for (const auto& [key, coeff] : terms) m = std::max(m, coeff.max_abs());
    return m;
}

bool SymbolComponent::is_polynomial() const {
    for (const auto& [key, coeff] : terms)
        if (key.q != 0) return false;
    return true;
}

void component_add_term(SymbolComponent& comp, const Mi& beta, int q, const JetMatrix& coeff) {
    if (mi_degree(beta) - 2 * q != comp.order)
        throw InputError("symbol term violates component homogeneity");
    if (coeff.max_abs() == 0.0) return;
    TermKey key{beta, q};
    auto it = comp.terms.find(key);
    if (it == comp.terms.end())
        comp.terms.emplace(key, coeff);
    else
        it->second = jet_matrix_add(it->second, coeff);
}

SymbolComponent component_scale(const SymbolComponent& comp, cplx factor) {
    SymbolComponent out;
    out.order = comp.order;
    for (const auto& [key, coeff] : comp.terms) out.terms.emplace(key, jet_matrix_scale(coeff, factor));
    return out;
}

SymbolComponent component_add(const SymbolComponent& a, const SymbolComponent& b) {
    if (a.order != b.order) throw InputError("component_add: order mismatch");
    SymbolComponent out = a;
    for (const auto& [key, coeff] : b.terms) component_add_term(out, key.beta, key.q, coeff);
    return out;
}

SymbolComponent component_multiply(const SymbolComponent& a, const SymbolComponent& b) {
    SymbolComponent out;
    out.order = a.order + b.order;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            component_add_term(out, add_mi(ka.beta, kb.beta), ka.q + kb.q,
                               jet_matrix_multiply(ca, cb));
    return out;
}

SymbolComponent component_divide_by_q(const SymbolComponent& comp) {
    SymbolComponent out;
    out.order = comp.order - 2;
    for (const auto& [key, coeff] : comp.terms)
        out.terms.emplace(TermKey{key.beta, key.q + 1}, coeff);
    return out;
}

SymbolComponent component_xi_derivative(const SymbolComponent& comp, int axis,
                                        const QuadraticForm* qform) {
    SymbolComponent out;
    out.order = comp.order - 1;
    for (const auto& [key, coeff] : comp.terms) {
        // monomial part: beta_axis xi^{beta - e_axis}
        if (key.beta[static_cast<size_t>(axis)] > 0) {
            Mi lowered = key.beta;
            lowered[static_cast<size_t>(axis)] -= 1;
            component_add_term(out, lowered, key.q,
                               jet_matrix_scale(coeff, key.beta[static_cast<size_t>(axis)]));
        }
        // denominator part: -q * dQ/dxi_axis / Q^{q+1}, dQ/dxi_axis = 2 g^{aj} xi_j
        if (key.q > 0) {
            if (qform == nullptr)
                throw InputError("xi-derivative of rational term requires a quadratic form");
            for (int j = 0; j < qform->dim; ++j) {
                const Jet& gaj = qform->at(axis, j);
                if (gaj.max_abs() == 0.0) continue;
                component_add_term(out, add_mi(key.beta, unit_mi(j)), key.q + 1,
                                   jet_matrix_scale_jet(jet_matrix_scale(coeff, -2.0 * key.q), gaj));
            }
        }
    }
    return out;
}

SymbolComponent component_x_derivative(const SymbolComponent& comp, int axis,
                                       const QuadraticForm* qform) {
    SymbolComponent out;
    out.order = comp.order;
    for (const auto& [key, coeff] : comp.terms) {
        component_add_term(out, key.beta, key.q, jet_matrix_partial(coeff, axis));
        // -q * dQ/dx_axis / Q^{q+1}, dQ/dx_axis = sum_{ij} (d_a g^{ij}) xi_i xi_j
        if (key.q > 0) {
            if (qform == nullptr)
                throw InputError("x-derivative of rational term requires a quadratic form");
            for (int i = 0; i < qform->dim; ++i)
                for (int j = i; j < qform->dim; ++j) {
                    const double mult = (i == j) ? 1.0 : 2.0;
                    const Jet dg = jet_partial(qform->at(i, j), axis);
                    if (dg.max_abs() == 0.0) continue;
                    component_add_term(
                        out, add_mi(key.beta, add_mi(unit_mi(i), unit_mi(j))), key.q + 1,
                        jet_matrix_scale_jet(jet_matrix_scale(coeff, -mult * key.q), dg));
                }
        }
    }
    return out;
}

SymbolComponent component_common_denominator(const SymbolComponent& comp,
                                             const QuadraticForm* qform) {
    int qmax = 0;
    for (const auto& [key, coeff] : comp.terms) qmax = std::max(qmax, key.q);
    if (qmax == 0) return comp;
    if (qform == nullptr)
        throw InputError("component_common_denominator: rational terms need a quadratic form");
    SymbolComponent out;
    out.order = comp.order;
    for (const auto& [key, coeff] : comp.terms) {
        Mi beta = key.beta;
        JetMatrix num = coeff;
        SymbolComponent scratch;  // reuse term accumulation for Q-multiplication
        scratch.order = comp.order + 2 * key.q;  // homogeneity of beta alone
        scratch.terms.emplace(TermKey{beta, 0}, num);
        for (int rep = key.q; rep < qmax; ++rep) {
            SymbolComponent next;
            next.order = scratch.order + 2;
            for (const auto& [k2, n2] : scratch.terms)
                for (int i = 0; i < qform->dim; ++i)
                    for (int j = i; j < qform->dim; ++j) {
                        const double mult = (i == j) ? 1.0 : 2.0;
                        const Jet& gij = qform->at(i, j);
                        if (gij.max_abs() == 0.0) continue;
                        component_add_term(next, add_mi(k2.beta, add_mi(unit_mi(i), unit_mi(j))), 0,
                                           jet_matrix_scale_jet(jet_matrix_scale(n2, mult), gij));
                    }
            scratch = std::move(next);
        }
        for (const auto& [k2, n2] : scratch.terms) component_add_term(out, k2.beta, qmax, n2);
    }
    return out;
}

const SymbolComponent* GradedSymbol::component(int order) const {
    auto it = comps.find(order);
    return it == comps.end() ? nullptr : &it->second;
}

MatC evaluate_component(const GradedSymbol& symbol, int order, const Vec& xi) {
    const SymbolComponent* comp = symbol.component(order);
    if (comp == nullptr) throw InputError("evaluate_component: order not present");
    double q0 = 0.0;
    if (!comp->is_polynomial()) {
        if (symbol.qform == nullptr)
            throw InputError("evaluate_component: rational terms without quadratic form");
        q0 = symbol.qform->eval(xi);
        if (std::abs(q0) < 1e-300)
            throw SingularError("evaluate_component: quadratic form vanishes at xi");
    }
    MatC out = matc_zero(symbol.rank);
    for (const auto& [key, coeff] : comp->terms) {
        double mono = 1.0;
        for (int i = 0; i < symbol.dim; ++i)
            for (int rep = 0; rep < key.beta[static_cast<size_t>(i)]; ++rep) mono *= xi[i];
        const double denom = key.q == 0 ? 1.0 : std::pow(q0, key.q);
        const cplx f = mono / denom;
        for (int i = 0; i < symbol.rank; ++i)
            for (int j = 0; j < symbol.rank; ++j)
                out.at(i, j) += f * coeff.at(i, j).value();
    }
    return out;
}

}  // namespace wres
