#pragma once

#include <array>
#include <span>
#include <vector>

#include "rirforge/engine_params.hpp"

namespace rirforge {

struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;  // denominator, a0 normalized to 1
};

// 4th-order Butterworth as two cascaded biquads (bilinear transform with
// frequency prewarping).
std::array<Biquad, 2> butterworth4_lowpass(double cutoff_hz, int sample_rate_hz);
std::array<Biquad, 2> butterworth4_highpass(double cutoff_hz, int sample_rate_hz);

// Forward-backward (zero-phase) application of a biquad cascade. The signal
// is zero-padded on both sides so filter transients ring into the pads; the
// output is cropped back to the input length. The effective magnitude
// response is the squared cascade magnitude with zero group delay.
class ZeroPhaseFilter {
public:
    ZeroPhaseFilter(std::vector<Biquad> sections, int pad_samples);

    std::vector<double> apply(std::span<const double> x) const;

    const std::vector<Biquad>& sections() const { return sections_; }
    int pad_samples() const { return pad_; }

private:
    std::vector<Biquad> sections_;
    int pad_;
};

enum class BranchKind { lowpass, bandpass, highpass };

// One zero-phase branch per band: lowpass below the first crossover,
// highpass above the last, band edges in between. Because each Butterworth
// LP/HP pair is power complementary and forward-backward filtering squares
// the magnitude, the branch magnitudes telescope to an exactly unity sum.
class FilterBank {
public:
    explicit FilterBank(const BandSpec& spec);

    std::size_t bands() const { return spec_.bands(); }
    const BandSpec& spec() const { return spec_; }
    BranchKind kind(std::size_t band) const;

    std::vector<double> apply_branch(std::size_t band, std::span<const double> x) const;

private:
    BandSpec spec_;
    std::vector<ZeroPhaseFilter> branches_;
};

// Filters each band buffer through its branch and sums in band order.
// All buffers must have equal lengths.
std::vector<double> apply_filterbank(const std::vector<std::vector<double>>& band_buffers,
                                     const FilterBank& bank);

}  // namespace rirforge
