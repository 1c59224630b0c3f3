#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rirforge/room.hpp"

namespace rirforge {

struct Rir {
    int sample_rate_hz = 0;
    std::vector<double> samples;
    Variant variant = Variant::SB;
    std::string config_id;
    std::size_t peak_index = 0;

    void update_peak_index();
};

}  // namespace rirforge
