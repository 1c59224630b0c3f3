#include "rirforge/engine_params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rirforge/errors.hpp"

namespace rirforge {

BandSpec BandSpec::make(std::vector<double> centers, int sample_rate_hz) {
    BandSpec spec;
    spec.centers_hz = std::move(centers);
    spec.sample_rate_hz = sample_rate_hz;
    spec.crossovers_hz.clear();
    for (std::size_t i = 0; i + 1 < spec.centers_hz.size(); ++i)
        spec.crossovers_hz.push_back(
            std::sqrt(spec.centers_hz[i] * spec.centers_hz[i + 1]));
    spec.validate();
    return spec;
}

BandSpec BandSpec::defaults(int sample_rate_hz) {
    return make({125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0}, sample_rate_hz);
}

void BandSpec::validate() const {
    if (centers_hz.size() < 2) throw FormatError("band spec needs >= 2 centers");
    for (std::size_t i = 0; i + 1 < centers_hz.size(); ++i)
        if (!(centers_hz[i] < centers_hz[i + 1]))
            throw FormatError("band centers must be strictly increasing");
    if (crossovers_hz.size() != centers_hz.size() - 1)
        throw FormatError("crossover count must be centers-1");
    if (!(crossovers_hz.back() < 0.5 * sample_rate_hz))
        throw FormatError("highest crossover must lie below Nyquist");
    if (!(centers_hz.front() > 0.0)) throw FormatError("band centers must be positive");
}

GammaParams GammaParams::defaults() {
    GammaParams gp;
    gp.shape = {1.72, 1.62, 1.93, 2.56, 4.17, 2.49};
    gp.scale = {0.39, 0.24, 0.14, 0.10, 0.09, 0.18};
    return gp;
}

void GammaParams::validate() const {
    if (shape.empty() || shape.size() != scale.size())
        throw FormatError("gamma shape/scale length mismatch");
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (!(shape[i] > 0.0) || !(scale[i] > 0.0))
            throw FormatError("gamma parameters must be strictly positive");
}

void EngineParams::validate() const {
    if (!(speed_of_sound_mps > 0.0)) throw FormatError("speed of sound must be positive");
    if (!(sabine_constant > 0.0)) throw FormatError("sabine constant must be positive");
    if (!(t60_clamp_lo_s > 0.0) || !(t60_clamp_hi_s > t60_clamp_lo_s))
        throw FormatError("bad t60 clamp window");
    if (!(distance_floor_m > 0.0)) throw FormatError("distance floor must be positive");
    if (sample_rate_hz <= 0) throw FormatError("sample rate must be positive");
    if (sinc_taps < 3 || sinc_taps % 2 == 0)
        throw FormatError("sinc taps must be an odd count >= 3");
    bands.validate();
    gamma.validate();
    if (bands.bands() != gamma.shape.size())
        throw FormatError("band count must match gamma parameter count");
}

void EngineParams::apply_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_json(ss.str());
}

void EngineParams::apply_config_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("config root must be a JSON object");

    for (auto& [key, value] : j.items()) {
        if (key == "speed_of_sound_mps") speed_of_sound_mps = value.get<double>();
        else if (key == "sabine_constant") sabine_constant = value.get<double>();
        else if (key == "t60_clamp_s") {
            auto v = value.get<std::vector<double>>();
            if (v.size() != 2) throw FormatError("t60_clamp_s must be [lo, hi]");
            t60_clamp_lo_s = v[0];
            t60_clamp_hi_s = v[1];
        }
        else if (key == "distance_floor_m") distance_floor_m = value.get<double>();
        else if (key == "sample_rate_hz") sample_rate_hz = value.get<int>();
        else if (key == "sinc_taps") sinc_taps = value.get<int>();
        else if (key == "image_budget") image_budget = value.get<std::uint64_t>();
        else if (key == "band_centers_hz")
            bands = BandSpec::make(value.get<std::vector<double>>(), sample_rate_hz);
        else if (key == "gamma_shape") gamma.shape = value.get<std::vector<double>>();
        else if (key == "gamma_scale") gamma.scale = value.get<std::vector<double>>();
        else throw FormatError("unknown config key: " + key);
    }
    // Re-derive crossovers in case the sample rate changed after the centers.
    bands = BandSpec::make(bands.centers_hz, sample_rate_hz);
    validate();
}

}  // namespace rirforge
