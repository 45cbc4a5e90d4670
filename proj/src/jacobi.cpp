#include "wres/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "wres/common.hpp"

namespace wres {

std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n, double tol, int max_sweeps) {
    if (n < 1 || a.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw InputError("jacobi_eigenvalues: bad matrix size");
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (double v : a) fro += v * v;
    fro = std::sqrt(fro);
    const double stop = tol * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        off = std::sqrt(off);
        if (off <= stop) {
            std::vector<double> ev(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i);
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (int p = 0; p < n; ++p) {
            double* rowp = &a[static_cast<size_t>(p) * n];
            for (int q = p + 1; q < n; ++q) {
                const double apq = rowp[q];
                if (apq == 0.0) continue;
                double* rowq = &a[static_cast<size_t>(q) * n];
                const double theta = (rowq[q] - rowp[p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                // rows p and q
                for (int k = 0; k < n; ++k) {
                    const double vp = rowp[k], vq = rowq[k];
                    rowp[k] = c * vp - s * vq;
                    rowq[k] = s * vp + c * vq;
                }
                // columns p and q
                for (int k = 0; k < n; ++k) {
                    double* rowk = &a[static_cast<size_t>(k) * n];
                    const double vp = rowk[p], vq = rowk[q];
                    rowk[p] = c * vp - s * vq;
                    rowk[q] = s * vp + c * vq;
                }
            }
        }
    }
    throw NumericError("jacobi_eigenvalues: no convergence within sweep cap");
}

}  // namespace wres
