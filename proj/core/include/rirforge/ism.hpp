#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rirforge/engine_params.hpp"
#include "rirforge/geometry.hpp"
#include "rirforge/room.hpp"

namespace rirforge {

// Wall order: x=0, x=Lx, y=0, y=Ly, z=0, z=Lz.
struct PerWallAbsorption {
    std::array<double, 6> alpha{};

    static PerWallAbsorption uniform(double a) {
        PerWallAbsorption w;
        w.alpha.fill(a);
        return w;
    }
    // Reflection amplitude factor per wall, beta = sqrt(1 - alpha).
    std::array<double, 6> betas() const;
    void validate() const;  // each alpha in (0, 1]; 1 is the free-field test hook
};

struct OrderTriple {
    int nx = 0, ny = 0, nz = 0;
    std::uint64_t image_count() const {
        return 8ull * (2ull * nx + 1) * (2ull * ny + 1) * (2ull * nz + 1);
    }
};

// One image, stored compactly; the full domain view is materialized on
// demand via ReflectionList::reflection().
struct ImageEntry {
    double distance_m = 0.0;
    double amplitude = 0.0;
    std::int16_t n[3] = {0, 0, 0};
    std::uint8_t parity = 0;  // bit i = axis-i mirror flag

    bool is_direct() const {
        return n[0] == 0 && n[1] == 0 && n[2] == 0 && parity == 0;
    }
};

// Fully materialized reflection (the domain view of one ImageEntry).
struct Reflection {
    std::array<int, 3> order_index{};
    std::array<int, 3> parity{};
    Vec3 image_pos_m;
    double distance_m = 0.0;
    double delay_s = 0.0;
    double amplitude = 0.0;
    Vec3 arrival_dir;   // receiver frame; valid if the list has arrival dirs
    Vec3 emission_dir;  // source frame; valid if the list has emission dirs
    std::array<int, 6> wall_hit_counts{};
};

class ReflectionList {
public:
    std::vector<ImageEntry> entries;       // sorted by (delay, image index)
    std::vector<Vec3> arrival_dirs;        // filled on demand
    std::vector<Vec3> emission_dirs;       // filled on demand

    std::size_t size() const { return entries.size(); }
    bool has_arrival_dirs() const { return arrival_dirs.size() == entries.size(); }
    bool has_emission_dirs() const { return emission_dirs.size() == entries.size(); }

    double max_distance_m() const {
        return entries.empty() ? 0.0 : entries.back().distance_m;
    }

    Reflection reflection(std::size_t i, const RoomConfig& config,
                          const EngineParams& params) const;
};

// Per-axis order so image distances cover the full -60 dB decay path.
OrderTriple max_order_for(const RoomConfig& config, double t60_s,
                          const EngineParams& params);

// Enumerates every image with per-axis index |n_i| <= order, sorted by delay
// (ties by image-index lexicographic order); the direct path comes first.
// Throws BudgetExceeded if the image count would exceed params.image_budget.
ReflectionList enumerate_images(const RoomConfig& config,
                                const PerWallAbsorption& absorption,
                                const OrderTriple& order,
                                const EngineParams& params);

// Recomputes amplitudes for a different absorption over the same geometry,
// using the exact arithmetic path of enumerate_images.
std::vector<double> amplitudes_for_absorption(const ReflectionList& list,
                                              const PerWallAbsorption& absorption,
                                              const EngineParams& params);

// Unit vectors toward each image, expressed in the receiver frame.
void fill_arrival_directions(ReflectionList& list, const RoomConfig& config);

// Emission directions at the source via reciprocity: the arrival direction
// of the index-matched reflection in the swapped-endpoint enumeration,
// expressed in the source frame (forward axis = source-to-receiver).
void fill_emission_directions(ReflectionList& list, const RoomConfig& config);

// Per-axis wall hit counts of an image: {|n-q|, |n|} per axis.
std::array<int, 6> wall_hits(const ImageEntry& e);

// World-frame image position for (config, entry).
Vec3 image_position(const ImageEntry& e, const RoomConfig& config);

}  // namespace rirforge
