#include "doctest.h"

#include <cmath>

#include "test_util.hpp"
#include "wres/curvature.hpp"
#include "wres/integrate.hpp"
#include "wres/laplacian.hpp"

using namespace wres;
using namespace wres::testutil;

namespace {

// Brute-force scalar curvature from metric VALUES only: fourth-order central
// differences supply dg and ddg, the rest is assembled with textbook index
// formulas. Fully independent of the jet pipeline.
double fd_scalar_curvature(const MetricField& metric, const Vec& x0, double h = 2e-2) {
    const int n = metric.dim;
    auto gv = [&](const Vec& x, int i, int j) {
        return metric.eval(x)[static_cast<size_t>(i * n + j)];
    };
    auto d1 = [&](int axis, auto&& fn) {
        auto g = [&](double off) {
            Vec y = x0;
            y[axis] += off;
            return fn(y);
        };
        return (-g(2 * h) + 8 * g(h) - 8 * g(-h) + g(-2 * h)) / (12 * h);
    };

    std::vector<double> g0 = metric.eval(x0);
    std::vector<double> dg(static_cast<size_t>(n * n * n));
    std::vector<double> ddg(static_cast<size_t>(n * n * n * n));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                dg[static_cast<size_t>((a * n + i) * n + j)] =
                    d1(a, [&](const Vec& y) { return gv(y, i, j); });
                for (int b = 0; b < n; ++b) {
                    auto inner = [&](const Vec& y) {
                        auto gshift = [&](double off) {
                            Vec z = y;
                            z[b] += off;
                            return gv(z, i, j);
                        };
                        return (-gshift(2 * h) + 8 * gshift(h) - 8 * gshift(-h) + gshift(-2 * h)) /
                               (12 * h);
                    };
                    ddg[static_cast<size_t>(((a * n + b) * n + i) * n + j)] = d1(a, inner);
                }
            }

    // inverse metric by Gauss-Jordan and d(g^-1) = -g^-1 dg g^-1
    std::vector<double> ginv;
    {
        std::vector<double> m = g0, inv(static_cast<size_t>(n * n), 0.0);
        for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i * n + i)] = 1.0;
        for (int c = 0; c < n; ++c) {
            const double piv = m[static_cast<size_t>(c * n + c)];
            for (int j = 0; j < n; ++j) {
                m[static_cast<size_t>(c * n + j)] /= piv;
                inv[static_cast<size_t>(c * n + j)] /= piv;
            }
            for (int r = 0; r < n; ++r) {
                if (r == c) continue;
                const double f = m[static_cast<size_t>(r * n + c)];
                for (int j = 0; j < n; ++j) {
                    m[static_cast<size_t>(r * n + j)] -= f * m[static_cast<size_t>(c * n + j)];
                    inv[static_cast<size_t>(r * n + j)] -= f * inv[static_cast<size_t>(c * n + j)];
                }
            }
        }
        ginv = inv;
    }
    auto gi = [&](int i, int j) { return ginv[static_cast<size_t>(i * n + j)]; };
    auto dgat = [&](int a, int i, int j) { return dg[static_cast<size_t>((a * n + i) * n + j)]; };
    auto ddgat = [&](int a, int b, int i, int j) {
        return ddg[static_cast<size_t>(((a * n + b) * n + i) * n + j)];
    };
    std::vector<double> dginv(static_cast<size_t>(n * n * n));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = 0.0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) v -= gi(i, p) * dgat(a, p, q) * gi(q, j);
                dginv[static_cast<size_t>((a * n + i) * n + j)] = v;
            }
    auto dgi = [&](int a, int i, int j) { return dginv[static_cast<size_t>((a * n + i) * n + j)]; };

    auto gamma = [&](int k, int i, int j) {
        double v = 0.0;
        for (int l = 0; l < n; ++l)
            v += 0.5 * gi(k, l) * (dgat(i, l, j) + dgat(j, l, i) - dgat(l, i, j));
        return v;
    };
    auto dgamma = [&](int a, int k, int i, int j) {
        double v = 0.0;
        for (int l = 0; l < n; ++l) {
            v += 0.5 * dgi(a, k, l) * (dgat(i, l, j) + dgat(j, l, i) - dgat(l, i, j));
            v += 0.5 * gi(k, l) * (ddgat(a, i, l, j) + ddgat(a, j, l, i) - ddgat(a, l, i, j));
        }
        return v;
    };

    double r = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double ric = 0.0;
            for (int k = 0; k < n; ++k) {
                ric += dgamma(k, k, i, j) - dgamma(i, k, k, j);
                for (int l = 0; l < n; ++l)
                    ric += gamma(k, k, l) * gamma(l, i, j) - gamma(k, i, l) * gamma(l, k, j);
            }
            r += gi(i, j) * ric;
        }
    return r;
}

// closed form for g = e^{2f} delta: r = e^{-2f}(-2(n-1) lap f - (n-1)(n-2) |grad f|^2)
double conformal_curvature(const TrigPoly& f, const Vec& x, int n) {
    double lap = 0.0, grad2 = 0.0;
    for (int i = 0; i < n; ++i) {
        lap += f.derivative(i).derivative(i).eval(x);
        const double fi = f.derivative(i).eval(x);
        grad2 += fi * fi;
    }
    return std::exp(-2.0 * f.eval(x)) * (-2.0 * (n - 1) * lap - (n - 1) * (n - 2) * grad2);
}

}  // namespace

TEST_CASE("scalar curvature of flat metrics is the zero jet") {
    const MetricField g = flat_metric(3);
    const Jet r = scalar_curvature(g, make_vec({0.3, 1.0, 2.0}), 2);
    CHECK(r.max_abs() < 1e-14);
}

TEST_CASE("conformal T^2 curvature matches the 2-D closed form") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(2, f);
    const Vec x0 = make_vec({0.3, 0.0});
    const Jet r = scalar_curvature(g, x0, 0);
    double lap_f = f.derivative(0).derivative(0).eval(x0) + f.derivative(1).derivative(1).eval(x0);
    const double expected = -2.0 * std::exp(-2.0 * f.eval(x0)) * lap_f;
    CHECK(std::abs(r.value().real() - expected) < 1e-8);
    CHECK(std::abs(r.value().imag()) < 1e-12);
}

TEST_CASE("conformal T^4 curvature matches finite differences and the closed form") {
    const TrigPoly f = trig_mode(4, {1, 0, 0, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(4, f);
    for (const Vec& x0 : {make_vec({0.0, 0.0, 0.0, 0.0}), make_vec({0.7, 1.1, 2.0, 0.4})}) {
        const double jet_value = scalar_curvature_value(g, x0);
        CHECK(std::abs(jet_value - fd_scalar_curvature(g, x0)) < 1e-5);
        CHECK(std::abs(jet_value - conformal_curvature(f, x0, 4)) < 1e-10);
    }
}

TEST_CASE("general metric curvature matches finite differences") {
    // anisotropic perturbation with an off-diagonal mode
    std::vector<TrigPoly> entries(4, trig_zero(2));
    entries[0] = trig_add(trig_constant(2, 1.0), trig_mode(2, {1, 0}, 0.15, 0.0));
    entries[3] = trig_add(trig_constant(2, 1.0), trig_mode(2, {0, 1}, 0.0, 0.12));
    entries[1] = trig_mode(2, {1, 1}, 0.05, 0.02);
    entries[2] = entries[1];
    const MetricField g = general_metric(2, entries);
    validate_positive_definite(g);
    for (const Vec& x0 : {make_vec({0.2, 0.5}), make_vec({1.9, 4.0})})
        CHECK(std::abs(scalar_curvature_value(g, x0) - fd_scalar_curvature(g, x0)) < 1e-5);
}

TEST_CASE("volume integrals: flat tori are exact") {
    CHECK(volume(flat_metric(2), 16) == doctest::Approx(kTwoPi * kTwoPi).epsilon(1e-13));
    CHECK(volume(flat_metric(4), 4) == doctest::Approx(std::pow(kTwoPi, 4)).epsilon(1e-13));
}

TEST_CASE("volume integral converges spectrally and matches 1-D quadrature") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(2, f);
    const double a32 = volume(g, 32);
    const double a64 = volume(g, 64);
    CHECK(std::abs(a32 - a64) < 1e-12);
    // dimensional reduction: area = 2 pi * int e^{2f(x1)} dx1, adaptive Simpson
    auto h = [&](double t) { return std::exp(2.0 * 0.1 * std::cos(t)); };
    std::function<double(double, double, double, double, double, int)> simpson =
        [&](double a, double b, double fa, double fb, double fm, int depth) -> double {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = h(lm), frm = h(rm);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (depth > 24 || std::abs(left + right - whole) < 1e-14)
            return left + right + (left + right - whole) / 15.0;
        return simpson(a, m, fa, fm, flm, depth + 1) + simpson(m, b, fm, fb, frm, depth + 1);
    };
    const double line = simpson(0.0, kTwoPi, h(0.0), h(kTwoPi), h(M_PI), 0);
    CHECK(std::abs(a64 - kTwoPi * line) < 1e-10);
}

TEST_CASE("Gauss-Bonnet on T^2: total curvature vanishes") {
    Rng rng(7);
    for (int rep = 0; rep < 3; ++rep) {
        const TrigPoly f = random_trig(rng, 2, 2, 2, 0.08);
        const MetricField g = conformal_metric(2, f);
        const double total = volume_integral(
            g, [&](const Vec& x) { return scalar_curvature_value(g, x); }, 48);
        CHECK(std::abs(total) < 1e-8);
    }
}

TEST_CASE("weitzenbock endomorphism: flat and potential cases") {
    const GeneralizedLaplacian flat = flat_laplacian(3, 2);
    const MatC e0 = weitzenbock_endomorphism(flat, make_vec({0.1, 0.2, 0.3}));
    CHECK(matc_max_abs(e0) < 1e-13);

    // c = V(x) Id passes through
    const TrigPoly v = trig_mode(2, {1, 1}, 0.4, 0.2);
    std::vector<TrigPoly> c(4, trig_zero(2));
    c[0] = v;
    c[3] = v;
    const GeneralizedLaplacian pot = make_generalized_laplacian(flat_metric(2), 2, {}, c);
    const Vec x0 = make_vec({0.9, 1.7});
    const MatC e = weitzenbock_endomorphism(pot, x0);
    CHECK(e.at(0, 0).real() == doctest::Approx(v.eval(x0)).epsilon(1e-12));
    CHECK(e.at(1, 1).real() == doctest::Approx(v.eval(x0)).epsilon(1e-12));
    CHECK(std::abs(e.at(0, 1)) < 1e-13);
}

TEST_CASE("weitzenbock round-trip recovers a chosen (omega, E) pair") {
    // flat metric: b^k = 2 omega_k, c = sum_i (d_i omega_i + omega_i^2) + E
    Rng rng(61);
    const int n = 2, r = 2;
    const std::vector<TrigPoly> omega = random_connection(n, r, 0.3, 555, {0, 1});
    std::vector<TrigPoly> e_field(static_cast<size_t>(r * r), trig_zero(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            e_field[static_cast<size_t>(i * r + j)] = random_trig(rng, n, n, 1, 0.3);

    auto omega_at = [&](int axis, int i, int j) {
        return omega[static_cast<size_t>((axis * r + i) * r + j)];
    };
    std::vector<TrigPoly> b(static_cast<size_t>(n * r * r), trig_zero(n));
    std::vector<TrigPoly> c = e_field;
    for (int axis = 0; axis < n; ++axis)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                b[static_cast<size_t>((axis * r + i) * r + j)] =
                    trig_scale(omega_at(axis, i, j), 2.0);
    for (int axis = 0; axis < n; ++axis)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                TrigPoly acc = omega_at(axis, i, j).derivative(axis);
                for (int m = 0; m < r; ++m)
                    acc = trig_add(acc, trig_multiply(omega_at(axis, i, m), omega_at(axis, m, j)));
                c[static_cast<size_t>(i * r + j)] = trig_add(c[static_cast<size_t>(i * r + j)], acc);
            }
    const GeneralizedLaplacian lap = make_generalized_laplacian(flat_metric(n), r, b, c);

    Rng pts(62);
    for (int rep = 0; rep < 10; ++rep) {
        Vec x = make_vec({pts.uniform(0.0, kTwoPi), pts.uniform(0.0, kTwoPi)});
        const MatC e = weitzenbock_endomorphism(lap, x);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(std::abs(e.at(i, j) - e_field[static_cast<size_t>(i * r + j)].eval(x)) < 1e-9);
    }
}

TEST_CASE("weitzenbock naturality: shifting c by delta Id shifts E by delta Id") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(2, f);
    const GeneralizedLaplacian lap = laplace_beltrami(g);
    std::vector<TrigPoly> shifted_c = lap.c;
    const double delta = 0.37;
    shifted_c[0] = trig_add(shifted_c[0], trig_constant(2, delta));
    const GeneralizedLaplacian lap2 = make_generalized_laplacian(g, 1, lap.b, shifted_c);
    const Vec x0 = make_vec({0.4, 2.2});
    const MatC e1 = weitzenbock_endomorphism(lap, x0);
    const MatC e2 = weitzenbock_endomorphism(lap2, x0);
    CHECK(e2.at(0, 0).real() - e1.at(0, 0).real() == doctest::Approx(delta).epsilon(1e-12));
}

TEST_CASE("laplace_beltrami has trivial connection and zero endomorphism") {
    const TrigPoly f = trig_mode(4, {1, 0, 0, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(4, f);
    const GeneralizedLaplacian lap = laplace_beltrami(g);
    for (const Vec& x0 : {make_vec({0.3, 0.1, 1.2, 2.2}), make_vec({2.5, 0.0, 0.0, 0.0})}) {
        const MatC e = weitzenbock_endomorphism(lap, x0);
        CHECK(matc_max_abs(e) < 1e-8);
    }
}

TEST_CASE("build_lichnerowicz: flat metric, zero connection is the flat Laplacian") {
    const GeneralizedLaplacian lap = build_lichnerowicz(flat_metric(2), 4, {});
    for (const TrigPoly& p : lap.b) CHECK(p.is_zero());
    for (const TrigPoly& p : lap.c) CHECK(p.is_zero());
}

TEST_CASE("build_lichnerowicz round-trips E = -r/4 Id through the recovery") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(2, f);
    const std::vector<TrigPoly> omega = random_connection(2, 2, 0.2, 99, {0, 1});
    const GeneralizedLaplacian lap = build_lichnerowicz(g, 2, omega);
    Rng pts(63);
    for (int rep = 0; rep < 6; ++rep) {
        Vec x = make_vec({pts.uniform(0.0, kTwoPi), pts.uniform(0.0, kTwoPi)});
        const MatC e = weitzenbock_endomorphism(lap, x);
        const double want = -scalar_curvature_value(g, x) / 4.0;
        CHECK(std::abs(e.at(0, 0).real() - want) < 1e-8);
        CHECK(std::abs(e.at(1, 1).real() - want) < 1e-8);
        CHECK(std::abs(e.at(0, 1)) < 1e-8);
    }
}

TEST_CASE("build_lichnerowicz: tr E is connection independent") {
    const TrigPoly f = trig_mode(2, {1, 0}, 0.1, 0.0);
    const MetricField g = conformal_metric(2, f);
    const GeneralizedLaplacian lap1 =
        build_lichnerowicz(g, 2, random_connection(2, 2, 0.2, 1001, {0, 1}));
    const GeneralizedLaplacian lap2 =
        build_lichnerowicz(g, 2, random_connection(2, 2, 0.2, 2002, {0, 1}));
    Rng pts(64);
    for (int rep = 0; rep < 6; ++rep) {
        Vec x = make_vec({pts.uniform(0.0, kTwoPi), pts.uniform(0.0, kTwoPi)});
        const cplx t1 = matc_trace(weitzenbock_endomorphism(lap1, x));
        const cplx t2 = matc_trace(weitzenbock_endomorphism(lap2, x));
        CHECK(std::abs(t1 - t2) < 1e-8);
    }
}

TEST_CASE("metric validation rejects indefinite input") {
    std::vector<TrigPoly> entries(4, trig_zero(2));
    entries[0] = trig_constant(2, 1.0);
    entries[3] = trig_add(trig_constant(2, 0.5), trig_mode(2, {1, 0}, 1.0, 0.0));  // dips negative
    const MetricField g = general_metric(2, entries);
    CHECK_THROWS_AS(validate_positive_definite(g), SingularError);
}
