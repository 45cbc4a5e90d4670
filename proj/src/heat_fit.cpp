#include "wres/heat_fit.hpp"

#include <algorithm>
#include <cmath>

namespace wres {

namespace {

// upper incomplete gamma at integer/half-integer s via the recursion
// Gamma(s+1, x) = s Gamma(s, x) + x^s e^{-x}
double upper_gamma(double s, double x) {
    const double twice = 2.0 * s;
    const long long t = std::llround(twice);
    if (t <= 0 || std::abs(twice - static_cast<double>(t)) > 1e-9)
        throw UnsupportedError("upper_gamma: half-integer order only");
    double value, order;
    if (t % 2 == 0) {
        value = std::exp(-x);
        order = 1.0;
    } else {
        value = std::sqrt(M_PI) * std::erfc(std::sqrt(x));
        order = 0.5;
    }
    while (order + 0.5 < s) {
        value = order * value + std::pow(x, order) * std::exp(-x);
        order += 1.0;
    }
    return value;
}

// Householder QR least squares for a small dense system.
void solve_least_squares(std::vector<double>& a, int rows, int cols, std::vector<double>& rhs,
                         std::vector<double>& solution, double& residual,
                         std::vector<double>& r_inv_rows) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * cols + j]; };
    for (int k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (int i = k; i < rows; ++i) norm += at(i, k) * at(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) throw NumericError("heat fit: rank-deficient design matrix");
        if (at(k, k) > 0) norm = -norm;
        const double alpha = norm;
        double vnorm2 = 0.0;
        std::vector<double> v(static_cast<size_t>(rows - k), 0.0);
        v[0] = at(k, k) - alpha;
        for (int i = k + 1; i < rows; ++i) v[static_cast<size_t>(i - k)] = at(i, k);
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 > 0.0) {
            for (int j = k; j < cols; ++j) {
                double dot = 0.0;
                for (int i = k; i < rows; ++i) dot += v[static_cast<size_t>(i - k)] * at(i, j);
                const double f = 2.0 * dot / vnorm2;
                for (int i = k; i < rows; ++i) at(i, j) -= f * v[static_cast<size_t>(i - k)];
            }
            double dot = 0.0;
            for (int i = k; i < rows; ++i) dot += v[static_cast<size_t>(i - k)] * rhs[static_cast<size_t>(i)];
            const double f = 2.0 * dot / vnorm2;
            for (int i = k; i < rows; ++i) rhs[static_cast<size_t>(i)] -= f * v[static_cast<size_t>(i - k)];
        }
    }
    solution.assign(static_cast<size_t>(cols), 0.0);
    for (int k = cols - 1; k >= 0; --k) {
        double acc = rhs[static_cast<size_t>(k)];
        for (int j = k + 1; j < cols; ++j) acc -= at(k, j) * solution[static_cast<size_t>(j)];
        solution[static_cast<size_t>(k)] = acc / at(k, k);
    }
    residual = 0.0;
    for (int i = cols; i < rows; ++i) residual += rhs[static_cast<size_t>(i)] * rhs[static_cast<size_t>(i)];
    residual = std::sqrt(residual);
    // rows of R^{-1} for covariance diagonals
    r_inv_rows.assign(static_cast<size_t>(cols * cols), 0.0);
    for (int c = 0; c < cols; ++c) {
        std::vector<double> e(static_cast<size_t>(cols), 0.0);
        e[static_cast<size_t>(c)] = 1.0;
        for (int k = cols - 1; k >= 0; --k) {
            double acc = e[static_cast<size_t>(k)];
            for (int j = k + 1; j < cols; ++j)
                acc -= at(k, j) * r_inv_rows[static_cast<size_t>(j * cols + c)];
            r_inv_rows[static_cast<size_t>(k * cols + c)] = acc / at(k, k);
        }
    }
}

}  // namespace

HeatTraceFit fit_heat_coefficients(const SpectrumModel& spec, int n, int K, double t_min,
                                   double t_max, int points, par::Exec exec) {
    if (K < 0 || K > 4) throw InputError("fit_heat_coefficients: K must be in [0,4]");
    if (points < 2 * std::max(K, 1)) throw InputError("fit_heat_coefficients: too few points");
    if (!(t_min > 0.0) || !(t_max > t_min)) throw InputError("fit_heat_coefficients: bad window");
    if (spec.cutoff * t_min < 30.0)
        throw FitError("fit_heat_coefficients: cutoff * t_min < 30, spectral tail uncontrolled");

    HeatTraceFit fit;
    fit.t_grid.resize(static_cast<size_t>(points));
    const double log_min = std::log(t_min), log_max = std::log(t_max);
    for (int i = 0; i < points; ++i)
        fit.t_grid[static_cast<size_t>(i)] =
            std::exp(log_min + (log_max - log_min) * i / (points - 1));

    const int cols = K + 1;
    std::vector<double> design(static_cast<size_t>(points * cols));
    std::vector<double> rhs(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = fit.t_grid[static_cast<size_t>(i)];
        const double w = std::pow(t, 0.5 * n);
        for (int k = 0; k <= K; ++k)
            design[static_cast<size_t>(i * cols + k)] = w * std::pow(t, 0.5 * (k - n));
        rhs[static_cast<size_t>(i)] = w * heat_trace(spec, t, exec);
    }

    std::vector<double> solution, r_inv;
    double residual = 0.0;
    solve_least_squares(design, points, cols, rhs, solution, residual, r_inv);
    fit.residual_norm = residual;
    for (int k = 0; k <= K; ++k) fit.coefficients[k] = solution[static_cast<size_t>(k)];

    const double sigma2 =
        points > cols ? residual * residual / static_cast<double>(points - cols) : 0.0;
    for (int k = 0; k <= K; ++k) {
        double cov = 0.0;
        for (int j = 0; j < cols; ++j) {
            const double rij = r_inv[static_cast<size_t>(k * cols + j)];
            cov += rij * rij;
        }
        fit.uncertainty[k] = std::sqrt(sigma2 * cov);
    }

    // Weyl-law tail estimate at t_min: N(lambda) ~ C lambda^{n/2} beyond the
    // cutoff, so tail = C (n/2) t^{-n/2} Gamma(n/2, t*cutoff)
    const double c_weyl = spec.total_multiplicity() / std::pow(spec.cutoff, 0.5 * n);
    fit.tail_bound = c_weyl * 0.5 * n * std::pow(t_min, -0.5 * n) *
                     upper_gamma(0.5 * n, t_min * spec.cutoff);

    double smallest = std::abs(fit.coefficients[0]);
    for (const auto& [k, v] : fit.coefficients) smallest = std::min(smallest, std::abs(v));
    fit.valid = fit.tail_bound <= 0.1 * smallest;
    return fit;
}

}  // namespace wres
