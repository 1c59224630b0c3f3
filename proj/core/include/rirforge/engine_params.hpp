#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rirforge {

// Octave-band layout. Crossovers sit at the geometric midpoints of adjacent
// centers, which is what makes the filterbank branches telescope to a flat
// sum (see filterbank.hpp).
struct BandSpec {
    std::vector<double> centers_hz;
    std::vector<double> crossovers_hz;
    int sample_rate_hz = 48000;

    static BandSpec make(std::vector<double> centers, int sample_rate_hz);
    static BandSpec defaults(int sample_rate_hz = 48000);

    std::size_t bands() const { return centers_hz.size(); }
    void validate() const;
};

// Per-band Gamma(shape, scale) reverberation-time model.
struct GammaParams {
    std::vector<double> shape;
    std::vector<double> scale;

    static GammaParams defaults();
    void validate() const;
};

// Every knob that can affect generated audio lives here so that the render
// parameter digest can be computed from one place.
struct EngineParams {
    double speed_of_sound_mps = 343.0;
    double sabine_constant = 0.161;
    double t60_clamp_lo_s = 0.05;
    double t60_clamp_hi_s = 3.0;
    double distance_floor_m = 0.1;
    int sample_rate_hz = 48000;
    int sinc_taps = 81;
    std::uint64_t image_budget = 10'000'000;
    BandSpec bands = BandSpec::defaults();
    GammaParams gamma = GammaParams::defaults();

    // Interpretation tags recorded into the manifest digest; they name the
    // conventions that are not forced by the sampled distributions.
    std::string amplitude_convention = "pressure-1-over-d";
    std::string placement_interpretation =
        "src-heading-pm45az-pm10el;boresight-at-src-jitter-yaw45-pitch10";
    std::string filter_design = "butterworth4-zero-phase-geometric-crossovers";

    static EngineParams defaults() { return {}; }
    void validate() const;

    // Merge overrides from a JSON config file (documented in the README).
    // Unknown keys are an error so that typos do not silently no-op.
    void apply_config_file(const std::string& path);
    void apply_config_json(const std::string& json_text);
};

}  // namespace rirforge
