#include "wres/hurwitz.hpp"

#include <cmath>
#include <vector>

#include "wres/common.hpp"

namespace wres {

namespace {

// B_2 .. B_16
constexpr double kBernoulli[8] = {1.0 / 6.0,      -1.0 / 30.0, 1.0 / 42.0,  -1.0 / 30.0,
                                  5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

// multiplicity of the S^n Laplacian written as a polynomial in mu = l + (n-1)/2
// (pairs of (power, coefficient)), plus the shift c = (n-1)/2
struct SphereData {
    double c;
    std::vector<std::pair<int, double>> mu_poly;
};

SphereData sphere_data(int n) {
    if (n == 2) return {0.5, {{1, 2.0}}};                      // 2l+1 = 2 mu
    if (n == 4) return {1.5, {{3, 1.0 / 3.0}, {1, -1.0 / 12.0}}};  // (mu^3 - mu/4)/3
    throw UnsupportedError("sphere zeta machinery supports n in {2,4} only");
}

double binom_rising(double s, int j) {
    // binom(s+j-1, j) = prod_{i=0}^{j-1} (s+i) / j!
    double v = 1.0;
    for (int i = 0; i < j; ++i) v *= (s + i) / (i + 1);
    return v;
}

}  // namespace

double hurwitz_zeta(double s, double a) {
    if (a <= 0.0) throw InputError("hurwitz_zeta: a must be positive");
    if (s == 1.0) throw InputError("hurwitz_zeta: pole at s = 1");
    const int m_terms = 24;
    double sum = 0.0;
    for (int m = 0; m < m_terms; ++m) sum += std::pow(m + a, -s);
    const double x = m_terms + a;
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);
    // Euler-Maclaurin corrections: B_{2j}/(2j)! * (s)_{2j-1} * x^{-s-2j+1}
    double rising = s;  // (s)_1
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 8; ++j) {
        sum += kBernoulli[j - 1] / fact * rising * std::pow(x, -s - 2 * j + 1);
        // advance (s)_{2j-1} -> (s)_{2j+1}, (2j)! -> (2j+2)!
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

double sphere_zeta_residue(int n, int k, int j_max) {
    if (j_max < 2) throw InputError("sphere_zeta_residue: j_max must be >= 2");
    if (k != 0 && k != 2) throw UnsupportedError("sphere_zeta_residue: k in {0,2} only");
    if (n - k <= 0) throw UnsupportedError("sphere_zeta_residue: requires n > k");
    const SphereData data = sphere_data(n);
    const double s = 0.5 * (n - k);
    const double c2 = data.c * data.c;
    double residue = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        for (const auto& [p, coeff] : data.mu_poly) {
            // pole of zeta_H(2s + 2j - p, .) at argument 1
            if (std::abs(2.0 * s + 2.0 * j - p - 1.0) > 1e-12) continue;
            residue += 0.5 * binom_rising(s, j) * std::pow(c2, j) * coeff;
        }
    }
    return residue;
}

double sphere_zeta_value(int n, double s) {
    const SphereData data = sphere_data(n);
    const double c2 = data.c * data.c;
    const double a = 1.0 + data.c;  // first nonzero level has mu = 1 + c
    double sum = 0.0;
    double scale = 1.0;  // binom(s+j-1,j) c^{2j}
    for (int j = 0; j <= 200; ++j) {
        double term = 0.0;
        for (const auto& [p, coeff] : data.mu_poly) term += coeff * hurwitz_zeta(2.0 * s + 2.0 * j - p, a);
        term *= scale;
        sum += term;
        if (std::abs(term) < 1e-15 * std::max(1.0, std::abs(sum)) && j >= 4) break;
        scale *= (s + j) / (j + 1) * c2;
    }
    return sum;
}

}  // namespace wres
