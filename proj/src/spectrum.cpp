#include "wres/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "wres/gamma.hpp"

namespace wres {

double SpectrumModel::total_multiplicity() const {
    double t = 0.0;
    for (const SpectrumEntry& e : entries) t += e.multiplicity;
    return t;
}

SpectrumModel flat_torus_spectrum(int n, double lambda_max) {
    if (lambda_max <= 0.0) throw InputError("flat_torus_spectrum: cutoff must be positive");
    if (n < 1 || n > kMaxDim) throw InputError("flat_torus_spectrum: dimension out of range");
    const int kmax = static_cast<int>(std::floor(std::sqrt(lambda_max)));
    std::map<long long, double> levels;
    // enumerate k in [-kmax, kmax]^n
    std::array<int, kMaxDim> k{};
    auto rec = [&](auto&& self, int axis) -> void {
        if (axis == n) {
            long long norm2 = 0;
            for (int i = 0; i < n; ++i)
                norm2 += static_cast<long long>(k[static_cast<size_t>(i)]) * k[static_cast<size_t>(i)];
            if (static_cast<double>(norm2) <= lambda_max) levels[norm2] += 1.0;
            return;
        }
        for (int v = -kmax; v <= kmax; ++v) {
            k[static_cast<size_t>(axis)] = v;
            self(self, axis + 1);
        }
    };
    rec(rec, 0);
    SpectrumModel spec;
    spec.source = "flat-t" + std::to_string(n);
    spec.dim = n;
    spec.cutoff = lambda_max;
    spec.zero_mode_count = 1;
    for (const auto& [norm2, mult] : levels)
        spec.entries.push_back({static_cast<double>(norm2), mult});
    return spec;
}

SpectrumModel sphere_spectrum(int n, double lambda_max) {
    if (lambda_max <= 0.0) throw InputError("sphere_spectrum: cutoff must be positive");
    if (n < 2) throw InputError("sphere_spectrum: dimension must be >= 2");
    SpectrumModel spec;
    spec.source = "sphere-" + std::to_string(n);
    spec.dim = n;
    spec.cutoff = lambda_max;
    spec.zero_mode_count = 1;
    for (int l = 0;; ++l) {
        const double lambda = static_cast<double>(l) * (l + n - 1);
        if (lambda > lambda_max) break;
        // (2l+n-1) (l+n-2)! / (l! (n-1)!) computed as a product to stay exact
        double mult = static_cast<double>(2 * l + n - 1);
        for (int j = l + 1; j <= l + n - 2; ++j) mult *= j;
        mult /= factorial(n - 1);
        spec.entries.push_back({lambda, mult});
    }
    return spec;
}

double heat_trace(const SpectrumModel& spec, double t, par::Exec exec) {
    if (t <= 0.0) throw InputError("heat_trace: t must be positive");
    return par::map_sum<double>(
        spec.entries.size(),
        [&](size_t i) { return spec.entries[i].multiplicity * std::exp(-t * spec.entries[i].eigenvalue); },
        exec);
}

void write_spectrum_csv(const SpectrumModel& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("write_spectrum_csv: cannot open " + path);
    out << "eigenvalue,multiplicity\n";
    out.precision(17);
    for (const SpectrumEntry& e : spec.entries) out << e.eigenvalue << "," << e.multiplicity << "\n";
}

}  // namespace wres
