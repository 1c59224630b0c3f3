#include "rirforge/filterbank.hpp"

#include <algorithm>
#include <cmath>

#include "rirforge/errors.hpp"
#include "rirforge/geometry.hpp"

namespace rirforge {

namespace {

// Q values of the two conjugate pole pairs of a 4th-order Butterworth.
constexpr double kQ1 = 0.54119610014619698;   // 1 / (2 cos(pi/8))
constexpr double kQ2 = 1.30656296487637653;   // 1 / (2 cos(3 pi/8))

Biquad bilinear_lowpass(double cutoff_hz, int fs, double q) {
    const double w = std::tan(kPi * cutoff_hz / fs);  // prewarped
    const double den = 1.0 + w / q + w * w;
    Biquad s;
    s.b0 = w * w / den;
    s.b1 = 2.0 * s.b0;
    s.b2 = s.b0;
    s.a1 = 2.0 * (w * w - 1.0) / den;
    s.a2 = (1.0 - w / q + w * w) / den;
    return s;
}

Biquad bilinear_highpass(double cutoff_hz, int fs, double q) {
    const double w = std::tan(kPi * cutoff_hz / fs);
    const double den = 1.0 + w / q + w * w;
    Biquad s;
    s.b0 = 1.0 / den;
    s.b1 = -2.0 * s.b0;
    s.b2 = s.b0;
    s.a1 = 2.0 * (w * w - 1.0) / den;
    s.a2 = (1.0 - w / q + w * w) / den;
    return s;
}

void run_cascade_in_place(std::vector<double>& buf, const std::vector<Biquad>& sections) {
    for (const Biquad& s : sections) {
        double z1 = 0.0, z2 = 0.0;  // direct form II transposed
        for (double& v : buf) {
            const double in = v;
            const double out = s.b0 * in + z1;
            z1 = s.b1 * in - s.a1 * out + z2;
            z2 = s.b2 * in - s.a2 * out;
            v = out;
        }
    }
}

}  // namespace

std::array<Biquad, 2> butterworth4_lowpass(double cutoff_hz, int sample_rate_hz) {
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_rate_hz))
        throw FormatError("lowpass cutoff must lie in (0, Nyquist)");
    return {bilinear_lowpass(cutoff_hz, sample_rate_hz, kQ1),
            bilinear_lowpass(cutoff_hz, sample_rate_hz, kQ2)};
}

std::array<Biquad, 2> butterworth4_highpass(double cutoff_hz, int sample_rate_hz) {
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_rate_hz))
        throw FormatError("highpass cutoff must lie in (0, Nyquist)");
    return {bilinear_highpass(cutoff_hz, sample_rate_hz, kQ1),
            bilinear_highpass(cutoff_hz, sample_rate_hz, kQ2)};
}

ZeroPhaseFilter::ZeroPhaseFilter(std::vector<Biquad> sections, int pad_samples)
    : sections_(std::move(sections)), pad_(std::max(pad_samples, 16)) {}

std::vector<double> ZeroPhaseFilter::apply(std::span<const double> x) const {
    const std::size_t n = x.size();
    std::vector<double> buf(n + 2 * static_cast<std::size_t>(pad_), 0.0);
    std::copy(x.begin(), x.end(), buf.begin() + pad_);

    run_cascade_in_place(buf, sections_);
    std::reverse(buf.begin(), buf.end());
    run_cascade_in_place(buf, sections_);
    std::reverse(buf.begin(), buf.end());

    return {buf.begin() + pad_, buf.begin() + pad_ + static_cast<long>(n)};
}

FilterBank::FilterBank(const BandSpec& spec) : spec_(spec) {
    spec_.validate();
    const auto& xo = spec_.crossovers_hz;
    const int fs = spec_.sample_rate_hz;
    // Pad long enough for the slowest (lowest-frequency) edge to ring down.
    const int pad = std::max(1024, static_cast<int>(std::ceil(20.0 * fs / xo.front())));

    for (std::size_t b = 0; b < spec_.bands(); ++b) {
        std::vector<Biquad> sections;
        if (b > 0) {
            auto hp = butterworth4_highpass(xo[b - 1], fs);
            sections.insert(sections.end(), hp.begin(), hp.end());
        }
        if (b + 1 < spec_.bands()) {
            auto lp = butterworth4_lowpass(xo[b], fs);
            sections.insert(sections.end(), lp.begin(), lp.end());
        }
        branches_.emplace_back(std::move(sections), pad);
    }
}

BranchKind FilterBank::kind(std::size_t band) const {
    if (band == 0) return BranchKind::lowpass;
    if (band + 1 == spec_.bands()) return BranchKind::highpass;
    return BranchKind::bandpass;
}

std::vector<double> FilterBank::apply_branch(std::size_t band,
                                             std::span<const double> x) const {
    if (band >= branches_.size()) throw FormatError("band index out of range");
    return branches_[band].apply(x);
}

std::vector<double> apply_filterbank(const std::vector<std::vector<double>>& band_buffers,
                                     const FilterBank& bank) {
    if (band_buffers.size() != bank.bands())
        throw LengthMismatch("band buffer count does not match filterbank");
    const std::size_t n = band_buffers.empty() ? 0 : band_buffers.front().size();
    for (const auto& b : band_buffers)
        if (b.size() != n) throw LengthMismatch("band buffers must share one length");

    std::vector<double> out(n, 0.0);
    for (std::size_t b = 0; b < band_buffers.size(); ++b) {
        const std::vector<double> filtered = bank.apply_branch(b, band_buffers[b]);
        for (std::size_t i = 0; i < n; ++i) out[i] += filtered[i];
    }
    return out;
}

}  // namespace rirforge
