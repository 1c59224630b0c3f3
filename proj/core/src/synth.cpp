#include "rirforge/synth.hpp"

#include <cmath>

#include "rirforge/errors.hpp"

namespace rirforge {

void Rir::update_peak_index() {
    double best = -1.0;
    peak_index = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double a = std::abs(samples[i]);
        if (a > best) {
            best = a;
            peak_index = i;
        }
    }
}

void deposit(std::vector<double>& buffer, double delay_samples, double amplitude,
             Interp interp, int taps) {
    if (interp == Interp::nearest) {
        const auto idx = static_cast<long long>(std::llround(delay_samples));
        if (idx < 0 || idx >= static_cast<long long>(buffer.size()))
            throw LengthTooShort("nearest deposit outside buffer");
        buffer[static_cast<std::size_t>(idx)] += amplitude;
        return;
    }

    const int radius = (taps - 1) / 2;
    const auto first = static_cast<long long>(std::ceil(delay_samples - radius));
    const auto last = static_cast<long long>(std::floor(delay_samples + radius));
    if (last >= static_cast<long long>(buffer.size()))
        throw LengthTooShort("sinc kernel extends past buffer end");
    for (long long m = std::max(first, 0ll); m <= last; ++m) {
        const double t = static_cast<double>(m) - delay_samples;
        const double window = 0.5 * (1.0 + std::cos(2.0 * kPi * t / taps));
        const double x = kPi * t;
        const double sinc = t == 0.0 ? 1.0 : std::sin(x) / x;
        buffer[static_cast<std::size_t>(m)] += amplitude * window * sinc;
    }
}

std::size_t min_synthesis_length(const ReflectionList& list, int sample_rate_hz,
                                 Interp interp, const EngineParams& params) {
    const double max_delay =
        list.max_distance_m() / params.speed_of_sound_mps * sample_rate_hz;
    if (interp == Interp::nearest)
        return static_cast<std::size_t>(std::llround(max_delay)) + 1;
    const int radius = (params.sinc_taps - 1) / 2;
    return static_cast<std::size_t>(std::floor(max_delay + radius)) + 1;
}

Rir synthesize(const ReflectionList& list, std::size_t length_samples,
               int sample_rate_hz, Interp interp, const EngineParams& params,
               std::span<const double> amplitudes) {
    if (!amplitudes.empty() && amplitudes.size() != list.size())
        throw LengthMismatch("amplitude override length mismatch");
    if (length_samples == 0) throw LengthTooShort("zero-length synthesis buffer");

    Rir rir;
    rir.sample_rate_hz = sample_rate_hz;
    rir.samples.assign(length_samples, 0.0);
    const double to_samples = static_cast<double>(sample_rate_hz) / params.speed_of_sound_mps;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const double amp = amplitudes.empty() ? list.entries[i].amplitude : amplitudes[i];
        deposit(rir.samples, list.entries[i].distance_m * to_samples, amp, interp,
                params.sinc_taps);
    }
    rir.update_peak_index();
    return rir;
}

}  // namespace rirforge
