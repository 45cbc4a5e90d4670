#include "wres/fourier.hpp"

#include <cmath>

namespace wres {

TrigPoly project_samples_to_trig(const std::vector<double>& samples, int dim,
                                 const std::array<int, kMaxDim>& grid_per_axis, double tail_tol,
                                 double drop_tol) {
    const std::array<int, kMaxDim>& N = grid_per_axis;
    size_t total = 1;
    std::array<size_t, kMaxDim> stride{};
    for (int i = 0; i < dim; ++i) {
        if (N[static_cast<size_t>(i)] < 1) throw InputError("project_to_trig: grid must be >= 1");
        stride[static_cast<size_t>(i)] = total;
        total *= static_cast<size_t>(N[static_cast<size_t>(i)]);
    }
    if (samples.size() != total) throw InputError("project_to_trig: sample count mismatch");

    std::vector<cplx> data(samples.begin(), samples.end());

    // separable naive DFT, axis by axis: c_k = (1/N) sum_a f_a e^{-2pi i k a / N}
    for (int axis = 0; axis < dim; ++axis) {
        const size_t ni = static_cast<size_t>(N[static_cast<size_t>(axis)]);
        if (ni == 1) continue;
        const size_t st = stride[static_cast<size_t>(axis)];
        std::vector<cplx> line(ni), out(ni), twiddle(ni);
        for (size_t k = 0; k < ni; ++k) {
            const double ang = -kTwoPi * static_cast<double>(k) / static_cast<double>(ni);
            twiddle[k] = cplx(std::cos(ang), std::sin(ang));
        }
        const size_t lines = total / ni;
        for (size_t ln = 0; ln < lines; ++ln) {
            size_t rem = ln, base = 0;
            for (int i = 0; i < dim; ++i) {
                if (i == axis) continue;
                const size_t nOther = static_cast<size_t>(N[static_cast<size_t>(i)]);
                base += (rem % nOther) * stride[static_cast<size_t>(i)];
                rem /= nOther;
            }
            for (size_t a = 0; a < ni; ++a) line[a] = data[base + a * st];
            for (size_t k = 0; k < ni; ++k) {
                cplx acc{};
                size_t tw = 0;
                for (size_t a = 0; a < ni; ++a) {
                    acc += line[a] * twiddle[tw];
                    tw += k;
                    if (tw >= ni) tw -= ni;
                }
                out[k] = acc / static_cast<double>(ni);
            }
            for (size_t k = 0; k < ni; ++k) data[base + k * st] = out[k];
        }
    }

    // assemble cos/sin terms over the canonical half-space and check the tail
    TrigPoly p;
    p.dim = dim;
    double tail = 0.0;
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        std::array<int, kMaxDim> k{};
        bool nyquist = false, outer = false;
        for (int i = 0; i < dim; ++i) {
            const int ni = N[static_cast<size_t>(i)];
            const int raw = static_cast<int>(rem % static_cast<size_t>(ni));
            rem /= static_cast<size_t>(ni);
            const int freq = raw <= ni / 2 ? raw : raw - ni;
            if (ni > 1 && ni % 2 == 0 && raw == ni / 2) nyquist = true;
            if (ni > 1 && std::abs(freq) > ni / 3) outer = true;
            k[static_cast<size_t>(i)] = freq;
        }
        const double amp = std::abs(data[idx]);
        if (nyquist || outer) {
            tail = std::max(tail, amp);
            continue;
        }
        // keep the canonical half-space only; the mirrored mode carries the
        // conjugate coefficient
        int sign = 0;
        for (int i = 0; i < dim; ++i) {
            if (k[static_cast<size_t>(i)] != 0) {
                sign = k[static_cast<size_t>(i)] > 0 ? 1 : -1;
                break;
            }
        }
        if (sign < 0) continue;
        TrigTerm t;
        t.k = k;
        if (sign == 0) {
            t.c = data[idx].real();
            t.s = 0.0;
        } else {
            t.c = 2.0 * data[idx].real();
            t.s = -2.0 * data[idx].imag();
        }
        if (std::abs(t.c) <= drop_tol && std::abs(t.s) <= drop_tol) continue;
        p.terms.push_back(t);
    }
    if (tail > tail_tol)
        throw ResolutionError("project_to_trig: Fourier tail " + std::to_string(tail) +
                              " above threshold; increase the projection grid");
    trig_canonicalize(p, drop_tol);
    return p;
}

TrigPoly project_to_trig(const std::function<double(const Vec&)>& field, int dim,
                         const std::array<int, kMaxDim>& grid_per_axis, double tail_tol,
                         double drop_tol) {
    size_t total = 1;
    for (int i = 0; i < dim; ++i) {
        if (grid_per_axis[static_cast<size_t>(i)] < 1)
            throw InputError("project_to_trig: grid must be >= 1");
        total *= static_cast<size_t>(grid_per_axis[static_cast<size_t>(i)]);
    }
    std::vector<double> samples(total);
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        Vec x = zero_vec(dim);
        for (int i = 0; i < dim; ++i) {
            const size_t ni = static_cast<size_t>(grid_per_axis[static_cast<size_t>(i)]);
            x[i] = kTwoPi * static_cast<double>(rem % ni) / static_cast<double>(ni);
            rem /= ni;
        }
        samples[idx] = field(x);
    }
    return project_samples_to_trig(samples, dim, grid_per_axis, tail_tol, drop_tol);
}

}  // namespace wres
