#pragma once

#include <span>
#include <vector>

#include "rirforge/audio_io.hpp"

namespace rirforge {

// Rational polyphase resampler (Kaiser-windowed sinc prototype, 32 taps per
// phase, ~90 dB stopband). Output length is ceil(len * to / from).
std::vector<double> resample(std::span<const double> x, int from_hz, int to_hz);

AudioBuffer resample_to(const AudioBuffer& in, int to_hz);

}  // namespace rirforge
