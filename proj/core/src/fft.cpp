#include "rirforge/fft.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>

#include <fftw3.h>

#include "rirforge/errors.hpp"

namespace rirforge {

namespace {
// FFTW plan creation is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n) {
    if (n == 0 || (n & 1)) throw FormatError("rfft length must be even and nonzero");
    double* in = fftw_alloc_real(n);
    fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
    const std::size_t m = std::min(x.size(), n);
    std::memcpy(in, x.data(), m * sizeof(double));
    std::memset(in + m, 0, (n - m) * sizeof(double));

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::vector<std::complex<double>> spec(n / 2 + 1);
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] = {out[i][0], out[i][1]};
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return spec;
}

std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t n) {
    if (n == 0 || (n & 1)) throw FormatError("irfft length must be even and nonzero");
    if (spec.size() != n / 2 + 1) throw LengthMismatch("irfft spectrum size mismatch");
    fftw_complex* in = fftw_alloc_complex(n / 2 + 1);
    double* out = fftw_alloc_real(n);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        in[i][0] = spec[i].real();
        in[i][1] = spec[i].imag();
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::vector<double> x(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = out[i] * scale;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return x;
}

std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;

    // Direct form when the short operand's nonzero taps make it cheaper than
    // the transform; this also keeps convolution with a one-hot kernel exact.
    std::span<const double> sig = a.size() >= b.size() ? a : b;
    std::span<const double> ker = a.size() >= b.size() ? b : a;
    std::size_t ker_nnz = 0;
    for (double v : ker)
        if (v != 0.0) ++ker_nnz;
    const std::size_t n = next_pow2(out_len);
    const double fft_cost = 3.0 * static_cast<double>(n) *
                            std::max(1.0, std::log2(static_cast<double>(n)));
    const double direct_cost =
        static_cast<double>(ker_nnz) * static_cast<double>(sig.size());
    if (direct_cost <= fft_cost) {
        std::vector<double> out(out_len, 0.0);
        for (std::size_t k = 0; k < ker.size(); ++k) {
            const double kv = ker[k];
            if (kv == 0.0) continue;
            for (std::size_t i = 0; i < sig.size(); ++i) out[i + k] += kv * sig[i];
        }
        return out;
    }

    auto fa = rfft(a, n);
    auto fb = rfft(b, n);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    auto full = irfft(fa, n);
    full.resize(out_len);
    return full;
}

}  // namespace rirforge
