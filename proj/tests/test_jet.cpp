#include "doctest.h"

#include <cmath>

#include "test_util.hpp"
#include "wres/jet.hpp"
#include "wres/jet_matrix.hpp"

using namespace wres;
using namespace wres::testutil;

namespace {

Mi mi(std::initializer_list<int> vals) {
    Mi m{0, 0, 0, 0};
    int i = 0;
    for (int v : vals) m[static_cast<size_t>(i++)] = v;
    return m;
}

}  // namespace

TEST_CASE("multi-index enumeration is graded-lex with binomial count") {
    const auto idx = enumerate_multi_indices(2, 3);
    CHECK(idx.size() == 10);  // C(2+3,3)
    CHECK(idx[0] == mi({0, 0}));
    for (size_t i = 1; i < idx.size(); ++i) CHECK(mi_graded_lex_less(idx[i - 1], idx[i]));
    CHECK(mi_factorial(mi({3, 2})) == 12.0);
}

TEST_CASE("trig_jet of cos(x1) at 0 matches the Taylor series") {
    const TrigPoly f = trig_mode(2, {1, 0}, 1.0, 0.0);
    const Jet j = trig_jet(f, zero_vec(2), 2);
    CHECK(j.coefficient(mi({0, 0})).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(j.coefficient(mi({1, 0}))) < 1e-14);
    CHECK(j.coefficient(mi({2, 0})).real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(j.coefficient(mi({0, 1}))) < 1e-14);
}

TEST_CASE("trig_jet of sin(x1) at 0, order 1") {
    const TrigPoly f = trig_mode(1, {1}, 0.0, 1.0);
    const Jet j = trig_jet(f, zero_vec(1), 1);
    CHECK(std::abs(j.coefficient(mi({0}))) < 1e-14);
    CHECK(j.coefficient(mi({1})).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trig_jet agrees with central finite differences") {
    // f = 0.3 cos(2 x1 + x2) at (0.7, 1.1), order 3
    const TrigPoly f = trig_mode(2, {2, 1}, 0.3, 0.0);
    const Vec x0 = make_vec({0.7, 1.1});
    const Jet j = trig_jet(f, x0, 3);
    const auto eval = [&](const Vec& x) { return f.eval(x); };
    for (const Mi& alpha : enumerate_multi_indices(2, 3)) {
        const double fd = central_difference(eval, x0, alpha);
        const double coeff = j.coefficient(alpha).real() * mi_factorial(alpha);
        CHECK(rel_err(coeff, fd) < 1e-6);
    }
}

TEST_CASE("jet multiplication truncates the Cauchy product") {
    const TrigPoly cosx = trig_mode(1, {1}, 1.0, 0.0);
    const Jet j = trig_jet(cosx, zero_vec(1), 2);
    const Jet sq = jet_multiply(j, j);
    // cos^2 truncated at order 2 is 1 - x^2
    CHECK(sq.coefficient(mi({0})).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(sq.coefficient(mi({1}))) < 1e-14);
    CHECK(sq.coefficient(mi({2})).real() == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("multiplication by the constant-1 jet is the identity") {
    Rng rng(11);
    const Vec x0 = make_vec({0.2, 0.4, 0.1});
    const Jet a = random_jet(rng, 3, 3, x0);
    const Jet one = jet_constant(3, 3, x0, 1.0);
    CHECK(jet_max_diff(jet_multiply(a, one), a) < 1e-15);
}

TEST_CASE("exp jets telescope: e^f * e^-f = 1") {
    const TrigPoly f = trig_mode(1, {1}, 0.0, 0.2);  // 0.2 sin x1
    const Vec x0 = make_vec({0.5});
    const Jet jf = trig_jet(f, x0, 4);
    const Jet prod = jet_multiply(jet_exp(jf), jet_exp(jet_scale(jf, -1.0)));
    const Jet one = jet_constant(1, 4, x0, 1.0);
    CHECK(jet_max_diff(prod, one) < 1e-12);
}

TEST_CASE("jet_invert geometric series") {
    // 1 + x at 0, J=2 -> 1 - x + x^2
    Jet a = jet_constant(1, 2, zero_vec(1), 1.0);
    a.c[1] = 1.0;
    const Jet inv = jet_invert(a);
    CHECK(inv.coefficient(mi({0})).real() == doctest::Approx(1.0));
    CHECK(inv.coefficient(mi({1})).real() == doctest::Approx(-1.0));
    CHECK(inv.coefficient(mi({2})).real() == doctest::Approx(1.0));

    const Jet half = jet_invert(jet_constant(1, 2, zero_vec(1), 2.0));
    CHECK(half.value().real() == doctest::Approx(0.5));
}

TEST_CASE("jet_invert matches the independent reciprocal construction") {
    // inverse of e^{2f} vs exp of -2f
    const TrigPoly f = trig_mode(1, {1}, 0.1, 0.0);
    const Vec x0 = make_vec({1.0});
    const Jet e2f = jet_exp(jet_scale(trig_jet(f, x0, 3), 2.0));
    const Jet inv = jet_invert(e2f);
    const Jet oracle = jet_exp(jet_scale(trig_jet(f, x0, 3), -2.0));
    CHECK(jet_max_diff(inv, oracle) < 1e-10);
}

TEST_CASE("jet_invert rejects singular jets") {
    const Jet z = jet_zero(1, 2, zero_vec(1));
    CHECK_THROWS_AS((void)jet_invert(z), SingularError);
}

TEST_CASE("jet_partial basics") {
    // 1 + 2x + 3x^2 -> 2 + 6x
    Jet a = jet_constant(1, 2, zero_vec(1), 1.0);
    a.c[1] = 2.0;
    a.c[2] = 3.0;
    const Jet d = jet_partial(a, 0);
    CHECK(d.order == 1);
    CHECK(d.coefficient(mi({0})).real() == doctest::Approx(2.0));
    CHECK(d.coefficient(mi({1})).real() == doctest::Approx(6.0));

    const Jet dz = jet_partial(jet_constant(1, 1, zero_vec(1), 5.0), 0);
    CHECK(dz.max_abs() < 1e-15);

    CHECK_THROWS_AS((void)jet_partial(jet_constant(1, 0, zero_vec(1), 1.0), 0), BudgetError);
}

TEST_CASE("mixed partials commute on trig jets") {
    const TrigPoly f = trig_mode(2, {1, 2}, 1.0, 0.0);
    const Jet j = trig_jet(f, make_vec({0.3, 0.9}), 4);
    const Jet d12 = jet_partial(jet_partial(j, 0), 1);
    const Jet d21 = jet_partial(jet_partial(j, 1), 0);
    CHECK(jet_max_diff(d12, d21) < 1e-14);
}

TEST_CASE("jet ring laws hold for random jets") {
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const int dim = 2 + static_cast<int>(rng.next_below(3));
        const int order = 1 + static_cast<int>(rng.next_below(4));
        Vec x0 = zero_vec(dim);
        for (int i = 0; i < dim; ++i) x0[i] = rng.uniform(0.0, kTwoPi);
        const Jet a = random_jet(rng, dim, order, x0);
        const Jet b = random_jet(rng, dim, order, x0);
        const Jet c = random_jet(rng, dim, order, x0);
        CHECK(jet_max_diff(jet_multiply(jet_multiply(a, b), c),
                           jet_multiply(a, jet_multiply(b, c))) < 1e-12);
        CHECK(jet_max_diff(jet_multiply(a, jet_add(b, c)),
                           jet_add(jet_multiply(a, b), jet_multiply(a, c))) < 1e-12);
        CHECK(jet_max_diff(jet_multiply(a, b), jet_multiply(b, a)) < 1e-12);
    }
}

TEST_CASE("Leibniz rule for jet_partial") {
    Rng rng(43);
    for (int rep = 0; rep < 10; ++rep) {
        const int dim = 2 + static_cast<int>(rng.next_below(2));
        Vec x0 = zero_vec(dim);
        const Jet a = random_jet(rng, dim, 3, x0);
        const Jet b = random_jet(rng, dim, 3, x0);
        for (int axis = 0; axis < dim; ++axis) {
            const Jet lhs = jet_partial(jet_multiply(a, b), axis);
            const Jet rhs = jet_add(jet_multiply(jet_partial(a, axis), jet_truncate(b, 2)),
                                    jet_multiply(jet_truncate(a, 2), jet_partial(b, axis)));
            CHECK(jet_max_diff(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("jet_invert then multiply returns one") {
    Rng rng(44);
    for (int rep = 0; rep < 10; ++rep) {
        const int dim = 2 + static_cast<int>(rng.next_below(3));
        Vec x0 = zero_vec(dim);
        Jet a = random_jet(rng, dim, 3, x0);
        a.c[0] += 3.0;  // keep the unit well away from zero
        const Jet prod = jet_multiply(a, jet_invert(a));
        CHECK(jet_max_diff(prod, jet_constant(dim, 3, x0, 1.0)) < 1e-12);
    }
}

TEST_CASE("jet_matrix_invert diagonal example") {
    // diag(1+x, 2) at 0, J=2 -> diag(1-x+x^2, 0.5)
    const Vec x0 = zero_vec(1);
    JetMatrix m = jet_matrix_zero(2, 1, 2, x0);
    Jet a = jet_constant(1, 2, x0, 1.0);
    a.c[1] = 1.0;
    m.at(0, 0) = a;
    m.at(1, 1) = jet_constant(1, 2, x0, 2.0);
    const JetMatrix inv = jet_matrix_invert(m);
    CHECK(inv.at(0, 0).coefficient(mi({0})).real() == doctest::Approx(1.0));
    CHECK(inv.at(0, 0).coefficient(mi({1})).real() == doctest::Approx(-1.0));
    CHECK(inv.at(0, 0).coefficient(mi({2})).real() == doctest::Approx(1.0));
    CHECK(inv.at(1, 1).value().real() == doctest::Approx(0.5));
    CHECK(inv.at(0, 1).max_abs() < 1e-15);

    const JetMatrix id = jet_matrix_identity(3, 1, 2, x0);
    const JetMatrix id_inv = jet_matrix_invert(id);
    CHECK(jet_max_diff(id_inv.at(0, 0), id.at(0, 0)) < 1e-15);
    CHECK(id_inv.at(0, 1).max_abs() < 1e-15);
}

TEST_CASE("jet_matrix_invert conformal metric against the explicit inverse") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const Vec x0 = make_vec({0.4, 1.3});
    JetMatrix g = jet_matrix_zero(2, 2, 2, x0);
    const Jet w = jet_exp(jet_scale(trig_jet(f, x0, 2), 2.0));
    g.at(0, 0) = w;
    g.at(1, 1) = w;
    const JetMatrix inv = jet_matrix_invert(g);
    const Jet oracle = jet_exp(jet_scale(trig_jet(f, x0, 2), -2.0));
    CHECK(jet_max_diff(inv.at(0, 0), oracle) < 1e-10);
    CHECK(jet_max_diff(inv.at(1, 1), oracle) < 1e-10);
    CHECK(inv.at(0, 1).max_abs() < 1e-12);
}

TEST_CASE("jet_matrix_invert round trip and singular rejection") {
    Rng rng(45);
    const Vec x0 = make_vec({0.1, 0.2});
    JetMatrix m = jet_matrix_zero(3, 2, 2, x0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m.at(i, j) = random_jet(rng, 2, 2, x0);
            if (i == j) m.at(i, j).c[0] += 4.0;
        }
    const JetMatrix prod = jet_matrix_multiply(m, jet_matrix_invert(m));
    const JetMatrix id = jet_matrix_identity(3, 2, 2, x0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(jet_max_diff(prod.at(i, j), id.at(i, j)) < 1e-11);

    JetMatrix sing = jet_matrix_zero(2, 2, 1, x0);
    CHECK_THROWS_AS((void)jet_matrix_invert(sing), SingularError);
}

TEST_CASE("trig poly algebra: products and derivatives stay exact") {
    Rng rng(46);
    const TrigPoly a = random_trig(rng, 2, 2, 2, 0.7);
    const TrigPoly b = random_trig(rng, 2, 2, 2, 0.7);
    const TrigPoly ab = trig_multiply(a, b);
    const TrigPoly da = a.derivative(0);
    for (int rep = 0; rep < 12; ++rep) {
        Vec x = make_vec({rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)});
        CHECK(ab.eval(x) == doctest::Approx(a.eval(x) * b.eval(x)).epsilon(1e-12));
        // 2 pi periodicity
        Vec shifted = x;
        shifted[0] += kTwoPi;
        CHECK(a.eval(shifted) == doctest::Approx(a.eval(x)).epsilon(1e-12));
        // derivative against finite differences
        const double fd = central_difference([&](const Vec& y) { return a.eval(y); }, x, unit_mi(0));
        CHECK(std::abs(da.eval(x) - fd) < 1e-6);
    }
}
