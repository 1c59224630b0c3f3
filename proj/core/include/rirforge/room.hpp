#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rirforge/engine_params.hpp"
#include "rirforge/geometry.hpp"

namespace rirforge {

enum class Variant { SB, MB, REC_MB, SRC_REC_MB };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// One sampled acoustic scene.
struct RoomConfig {
    std::string id;
    std::uint64_t seed = 0;
    Vec3 dims_m;
    Vec3 rec_pos_m;
    double rec_yaw_deg = 0.0;
    double rec_pitch_deg = 0.0;
    Vec3 src_pos_m;
    std::vector<double> t60_bands_s;
    double t60_scalar_s = 0.0;
    Variant variant = Variant::SB;
    std::vector<std::string> warnings;

    void validate(const EngineParams& params) const;

    std::string to_json_line() const;
    static RoomConfig from_json_line(const std::string& line);
};

// Six independent Gamma draws, one per band, clamped to the configured
// window. A draw outside the window is redrawn up to 100 times, then clamped
// hard with `clamped_flag` set.
std::vector<double> sample_t60_bands(const GammaParams& gp, std::uint64_t rng_seed,
                                     const EngineParams& params,
                                     bool* clamped_flag = nullptr);

RoomConfig sample_room(std::uint64_t rng_seed, Variant variant,
                       const EngineParams& params);

// Sabine: alpha = k * V / (S * T60). Values above 0.99 are clamped with
// `clamped_flag` set; they arise for large rooms asked to decay very fast.
double sabine_absorption(const Vec3& dims_m, double t60_s,
                         const EngineParams& params,
                         bool* clamped_flag = nullptr);

}  // namespace rirforge
