#include "wres/curved_t2.hpp"

#include <cmath>

#include "wres/jacobi.hpp"

namespace wres {

namespace {

// 1-D Fourier-collocation Laplacian assembled from the orthonormal real modes
// so the matrix is exactly symmetric positive semidefinite with a constant
// kernel vector.
std::vector<double> spectral_laplacian_1d(int n) {
    std::vector<double> k1(static_cast<size_t>(n) * n, 0.0);
    const double h = kTwoPi / n;
    auto add_mode = [&](double lambda, const std::vector<double>& v) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                k1[static_cast<size_t>(i) * n + j] +=
                    lambda * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    };
    std::vector<double> v(static_cast<size_t>(n));
    for (int k = 1; k <= n / 2; ++k) {
        const double lambda = static_cast<double>(k) * k;
        if (k < (n + 1) / 2) {
            for (int a = 0; a < n; ++a) v[static_cast<size_t>(a)] = std::sqrt(2.0 / n) * std::cos(k * h * a);
            add_mode(lambda, v);
            for (int a = 0; a < n; ++a) v[static_cast<size_t>(a)] = std::sqrt(2.0 / n) * std::sin(k * h * a);
            add_mode(lambda, v);
        } else {
            // Nyquist cosine mode for even n
            for (int a = 0; a < n; ++a)
                v[static_cast<size_t>(a)] = (a % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
            add_mode(lambda, v);
        }
    }
    return k1;
}

}  // namespace

SpectrumModel curved_t2_spectrum(const MetricField& metric, int grid_n) {
    if (metric.dim != 2) throw InputError("curved_t2_spectrum: metric must be 2-dimensional");
    if (metric.kind == MetricKind::General)
        throw UnsupportedError("curved_t2_spectrum: only flat/conformal metrics supported");
    if (grid_n < 16 || grid_n % 2 != 0)
        throw InputError("curved_t2_spectrum: grid must be even and >= 16");

    const int n = grid_n;
    const size_t dim = static_cast<size_t>(n) * n;
    const std::vector<double> k1 = spectral_laplacian_1d(n);

    // W K W with K = K1 (x) I + I (x) K1 and W = diag(e^{-f(x_a)});
    // index (a, b) -> a * n + b
    const double h = kTwoPi / n;
    std::vector<double> w(dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec x = zero_vec(2);
            x[0] = h * a;
            x[1] = h * b;
            const double f = metric.kind == MetricKind::Flat ? 0.0 : metric.f.eval(x);
            w[static_cast<size_t>(a) * n + b] = std::exp(-f);
        }

    std::vector<double> mat(dim * dim, 0.0);
#pragma omp parallel for schedule(static)
    for (long long row = 0; row < static_cast<long long>(dim); ++row) {
        const int a = static_cast<int>(row) / n, b = static_cast<int>(row) % n;
        double* out = &mat[static_cast<size_t>(row) * dim];
        const double wr = w[static_cast<size_t>(row)];
        for (int a2 = 0; a2 < n; ++a2) {
            const double k1aa = k1[static_cast<size_t>(a) * n + a2];
            for (int b2 = 0; b2 < n; ++b2) {
                double v = 0.0;
                if (b2 == b) v += k1aa;
                if (a2 == a) v += k1[static_cast<size_t>(b) * n + b2];
                if (v != 0.0) {
                    const size_t col = static_cast<size_t>(a2) * n + b2;
                    out[col] = wr * v * w[col];
                }
            }
        }
    }

    std::vector<double> ev = jacobi_eigenvalues(mat, static_cast<int>(dim));

    SpectrumModel spec;
    spec.source = "curved-t2";
    spec.dim = 2;
    spec.zero_mode_count = 0;
    const double scale = ev.back();
    for (double& lambda : ev) {
        if (lambda < -1e-8 * scale)
            throw NumericError("curved_t2_spectrum: negative eigenvalue from symmetric solve");
        if (std::abs(lambda) <= 1e-9 * scale) {
            lambda = 0.0;
            spec.zero_mode_count += 1;
        }
        spec.entries.push_back({lambda, 1.0});
    }
    spec.cutoff = ev.back();
    return spec;
}

}  // namespace wres
