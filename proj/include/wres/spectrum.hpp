#pragma once

#include <string>
#include <vector>

#include "wres/parallel.hpp"
#include "wres/common.hpp"

namespace wres {

struct SpectrumEntry {
    double eigenvalue = 0.0;
    double multiplicity = 1.0;
};

// Eigenvalue/multiplicity list up to a cutoff, powering heat traces and zeta
// residues. Entries are sorted ascending; zero modes are included (heat traces
// need them, zeta sums skip them).
struct SpectrumModel {
    std::string source;
    std::vector<SpectrumEntry> entries;
    double cutoff = 0.0;
    int zero_mode_count = 0;
    int dim = 0;

    double total_multiplicity() const;
};

// Flat torus T^n: eigenvalues |k|^2, k in Z^n, with lattice multiplicities.
SpectrumModel flat_torus_spectrum(int n, double lambda_max);

// Round unit sphere S^n: l(l+n-1) with multiplicity (2l+n-1)(l+n-2)!/(l!(n-1)!).
SpectrumModel sphere_spectrum(int n, double lambda_max);

// sum over entries of mult * exp(-t * lambda); zero modes included.
double heat_trace(const SpectrumModel& spec, double t, par::Exec exec = par::Exec::Parallel);

// CSV export, header "eigenvalue,multiplicity", one row per distinct level.
void write_spectrum_csv(const SpectrumModel& spec, const std::string& path);

}  // namespace wres
