#include "wres/sphere.hpp"

#include <cmath>

#include "wres/gamma.hpp"

namespace wres {

double sphere_monomial_integral(const Mi& beta, int n) {
    if (n < 2) throw InputError("sphere_monomial_integral: n must be >= 2");
    for (int i = 0; i < n; ++i)
        if (beta[static_cast<size_t>(i)] % 2 == 1) return 0.0;
    for (int i = n; i < kMaxDim; ++i)
        if (beta[static_cast<size_t>(i)] != 0)
            throw InputError("sphere_monomial_integral: exponent beyond dimension");
    double num = 2.0;
    for (int i = 0; i < n; ++i) num *= gamma_value(0.5 * (beta[static_cast<size_t>(i)] + 1));
    return num / gamma_value(0.5 * (mi_degree(beta) + n));
}

void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights) {
    if (k < 1) throw InputError("gauss_legendre: order must be >= 1");
    nodes.assign(static_cast<size_t>(k), 0.0);
    weights.assign(static_cast<size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        // Chebyshev initial guess, Newton on P_k
        double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= k; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = k * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = x;
        weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

std::vector<SpherePoint> sphere_quadrature(int n, int polar_points) {
    std::vector<SpherePoint> pts;
    const int m_azimuth = 4 * polar_points;
    const double dphi = kTwoPi / m_azimuth;
    if (n == 2) {
        for (int j = 0; j < m_azimuth; ++j) {
            const double phi = dphi * j;
            SpherePoint p;
            p.eta = zero_vec(2);
            p.eta[0] = std::cos(phi);
            p.eta[1] = std::sin(phi);
            p.weight = dphi;
            pts.push_back(p);
        }
        return pts;
    }
    std::vector<double> gl_x, gl_w;
    gauss_legendre(polar_points, gl_x, gl_w);
    if (n == 3) {
        // u = cos(theta), dS = du dphi
        for (int a = 0; a < polar_points; ++a)
            for (int j = 0; j < m_azimuth; ++j) {
                const double u = gl_x[static_cast<size_t>(a)];
                const double s = std::sqrt(1.0 - u * u);
                const double phi = dphi * j;
                SpherePoint p;
                p.eta = zero_vec(3);
                p.eta[0] = u;
                p.eta[1] = s * std::cos(phi);
                p.eta[2] = s * std::sin(phi);
                p.weight = gl_w[static_cast<size_t>(a)] * dphi;
                pts.push_back(p);
            }
        return pts;
    }
    if (n == 4) {
        // theta1 in [0,pi] with weight sin^2, u2 = cos(theta2), phi trapezoid
        for (int a = 0; a < polar_points; ++a) {
            const double t1 = 0.5 * M_PI * (gl_x[static_cast<size_t>(a)] + 1.0);
            const double w1 = 0.5 * M_PI * gl_w[static_cast<size_t>(a)] * std::sin(t1) * std::sin(t1);
            for (int b = 0; b < polar_points; ++b) {
                const double u2 = gl_x[static_cast<size_t>(b)];
                const double s2 = std::sqrt(1.0 - u2 * u2);
                for (int j = 0; j < m_azimuth; ++j) {
                    const double phi = dphi * j;
                    SpherePoint p;
                    p.eta = zero_vec(4);
                    p.eta[0] = std::cos(t1);
                    p.eta[1] = std::sin(t1) * u2;
                    p.eta[2] = std::sin(t1) * s2 * std::cos(phi);
                    p.eta[3] = std::sin(t1) * s2 * std::sin(phi);
                    p.weight = w1 * gl_w[static_cast<size_t>(b)] * dphi;
                    pts.push_back(p);
                }
            }
        }
        return pts;
    }
    throw UnsupportedError("sphere_quadrature: dimension not supported");
}

double sphere_integrate(int n, int polar_points, const std::function<double(const Vec&)>& f) {
    double acc = 0.0;
    for (const SpherePoint& p : sphere_quadrature(n, polar_points)) acc += p.weight * f(p.eta);
    return acc;
}

}  // namespace wres
