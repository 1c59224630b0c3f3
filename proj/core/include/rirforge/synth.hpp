#pragma once

#include <span>
#include <vector>

#include "rirforge/ism.hpp"
#include "rirforge/rir.hpp"

namespace rirforge {

enum class Interp { nearest, sinc };

// Hann-windowed sinc deposit at a fractional sample position. `taps` is the
// odd kernel support width T; the window is 0.5 * (1 + cos(2*pi*t/T)) over
// |t| <= (T-1)/2. At an exact integer delay the kernel reduces to one tap.
void deposit(std::vector<double>& buffer, double delay_samples, double amplitude,
             Interp interp, int taps);

// Places every reflection at its fractional delay. Throws LengthTooShort if
// a kernel would extend past the end of the buffer. `amplitudes` may
// override the stored ones (same length); pass {} to use the list's.
Rir synthesize(const ReflectionList& list, std::size_t length_samples,
               int sample_rate_hz, Interp interp, const EngineParams& params,
               std::span<const double> amplitudes = {});

// Minimum buffer length for this list: the last kernel tap plus one.
std::size_t min_synthesis_length(const ReflectionList& list, int sample_rate_hz,
                                 Interp interp, const EngineParams& params);

}  // namespace rirforge
