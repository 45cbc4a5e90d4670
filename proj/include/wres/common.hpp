#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wres {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 4;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Base point / coordinate on the torus [0,2pi)^n, n <= kMaxDim.
struct Vec {
    int n = 0;
    std::array<double, kMaxDim> x{};

    double operator[](int i) const { return x[static_cast<size_t>(i)]; }
    double& operator[](int i) { return x[static_cast<size_t>(i)]; }
    bool operator==(const Vec&) const = default;
};

inline Vec make_vec(std::initializer_list<double> vals) {
    Vec v;
    for (double d : vals) v.x[static_cast<size_t>(v.n++)] = d;
    return v;
}

inline Vec zero_vec(int n) {
    Vec v;
    v.n = n;
    return v;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

// Non-invertible jet, metric, or constant-term matrix.
struct SingularError : Error {
    using Error::Error;
};

// Jet order too small for the requested symbol cutoff.
struct BudgetError : Error {
    int required_jet_order;
    BudgetError(const std::string& msg, int required)
        : Error(msg), required_jet_order(required) {}
};

// Fourier projection tail above threshold.
struct ResolutionError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct FitError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

// Deterministic splitmix64 stream; distributions below are fully specified so
// seeded runs are bit-stable across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    // uniform integer in [0, m)
    uint64_t next_below(uint64_t m) { return next_u64() % m; }

private:
    uint64_t state_;
};

}  // namespace wres
