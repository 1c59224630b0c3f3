#pragma once

#include <span>
#include <string>
#include <vector>

namespace rirforge {

struct AudioBuffer {
    int sample_rate_hz = 0;
    std::vector<double> samples;  // mono

    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

// Reads a RIFF/WAVE file. PCM 16/24/32-bit and IEEE float 32/64 are
// supported; multichannel files are reduced to their first channel.
AudioBuffer read_wav(const std::string& path);

// Writes mono 32-bit float WAV.
void write_wav_float32(const std::string& path, std::span<const double> samples,
                       int sample_rate_hz);

}  // namespace rirforge
