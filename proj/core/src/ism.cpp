#include "rirforge/ism.hpp"

#include <algorithm>
#include <cmath>

#include "rirforge/errors.hpp"

namespace rirforge {

std::array<double, 6> PerWallAbsorption::betas() const {
    std::array<double, 6> b{};
    for (int i = 0; i < 6; ++i) b[i] = std::sqrt(1.0 - alpha[i]);
    return b;
}

void PerWallAbsorption::validate() const {
    for (double a : alpha)
        if (!(a > 0.0 && a <= 1.0))
            throw FormatError("wall absorption must lie in (0, 1]");
}

std::array<int, 6> wall_hits(const ImageEntry& e) {
    std::array<int, 6> hits{};
    for (int axis = 0; axis < 3; ++axis) {
        const int n = e.n[axis];
        const int q = (e.parity >> axis) & 1;
        hits[2 * axis] = std::abs(n - q);  // wall at coordinate 0
        hits[2 * axis + 1] = std::abs(n);  // wall at coordinate L
    }
    return hits;
}

Vec3 image_position(const ImageEntry& e, const RoomConfig& config) {
    Vec3 p;
    const Vec3& s = config.src_pos_m;
    const Vec3& L = config.dims_m;
    const double sv[3] = {s.x, s.y, s.z};
    const double lv[3] = {L.x, L.y, L.z};
    double out[3];
    for (int axis = 0; axis < 3; ++axis) {
        const int q = (e.parity >> axis) & 1;
        out[axis] = (1 - 2 * q) * sv[axis] + 2.0 * e.n[axis] * lv[axis];
    }
    p.x = out[0];
    p.y = out[1];
    p.z = out[2];
    return p;
}

namespace {

// Shared by enumeration and recomputation so the two agree at bit level.
double image_amplitude(const ImageEntry& e, const std::array<double, 6>& beta,
                       double distance_m, double distance_floor_m) {
    double refl = 1.0;
    for (int axis = 0; axis < 3; ++axis) {
        const int n = e.n[axis];
        const int q = (e.parity >> axis) & 1;
        refl *= std::pow(beta[2 * axis], std::abs(n - q)) *
                std::pow(beta[2 * axis + 1], std::abs(n));
    }
    return refl / std::max(distance_m, distance_floor_m);
}

bool entry_less(const ImageEntry& a, const ImageEntry& b) {
    if (a.distance_m != b.distance_m) return a.distance_m < b.distance_m;
    for (int axis = 0; axis < 3; ++axis)
        if (a.n[axis] != b.n[axis]) return a.n[axis] < b.n[axis];
    return a.parity < b.parity;
}

}  // namespace

OrderTriple max_order_for(const RoomConfig& config, double t60_s,
                          const EngineParams& params) {
    if (!(t60_s > 0.0)) throw FormatError("t60 must be positive");
    const double path = params.speed_of_sound_mps * t60_s;
    OrderTriple o;
    o.nx = static_cast<int>(std::ceil(path / (2.0 * config.dims_m.x))) + 1;
    o.ny = static_cast<int>(std::ceil(path / (2.0 * config.dims_m.y))) + 1;
    o.nz = static_cast<int>(std::ceil(path / (2.0 * config.dims_m.z))) + 1;
    return o;
}

ReflectionList enumerate_images(const RoomConfig& config,
                                const PerWallAbsorption& absorption,
                                const OrderTriple& order,
                                const EngineParams& params) {
    if (order.nx < 0 || order.ny < 0 || order.nz < 0)
        throw FormatError("image order must be non-negative");
    absorption.validate();
    const std::uint64_t count = order.image_count();
    if (count > params.image_budget)
        throw BudgetExceeded("image count " + std::to_string(count) +
                             " exceeds budget " + std::to_string(params.image_budget));

    const std::array<double, 6> beta = absorption.betas();
    const Vec3& rec = config.rec_pos_m;
    const double rv[3] = {rec.x, rec.y, rec.z};
    const Vec3& src = config.src_pos_m;
    const double sv[3] = {src.x, src.y, src.z};
    const double lv[3] = {config.dims_m.x, config.dims_m.y, config.dims_m.z};

    ReflectionList list;
    list.entries.reserve(static_cast<std::size_t>(count));

    for (int nx = -order.nx; nx <= order.nx; ++nx)
        for (int ny = -order.ny; ny <= order.ny; ++ny)
            for (int nz = -order.nz; nz <= order.nz; ++nz)
                for (std::uint8_t parity = 0; parity < 8; ++parity) {
                    ImageEntry e;
                    e.n[0] = static_cast<std::int16_t>(nx);
                    e.n[1] = static_cast<std::int16_t>(ny);
                    e.n[2] = static_cast<std::int16_t>(nz);
                    e.parity = parity;
                    double d2 = 0.0;
                    const int nv[3] = {nx, ny, nz};
                    for (int axis = 0; axis < 3; ++axis) {
                        const int q = (parity >> axis) & 1;
                        const double img = (1 - 2 * q) * sv[axis] + 2.0 * nv[axis] * lv[axis];
                        const double diff = img - rv[axis];
                        d2 += diff * diff;
                    }
                    e.distance_m = std::sqrt(d2);
                    e.amplitude =
                        image_amplitude(e, beta, e.distance_m, params.distance_floor_m);
                    list.entries.push_back(e);
                }

    std::sort(list.entries.begin(), list.entries.end(), entry_less);
    return list;
}

std::vector<double> amplitudes_for_absorption(const ReflectionList& list,
                                              const PerWallAbsorption& absorption,
                                              const EngineParams& params) {
    absorption.validate();
    const std::array<double, 6> beta = absorption.betas();
    std::vector<double> amps(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
        amps[i] = image_amplitude(list.entries[i], beta, list.entries[i].distance_m,
                                  params.distance_floor_m);
    return amps;
}

void fill_arrival_directions(ReflectionList& list, const RoomConfig& config) {
    const Frame rec_frame = Frame::from_yaw_pitch(config.rec_yaw_deg, config.rec_pitch_deg);
    list.arrival_dirs.resize(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Vec3 img = image_position(list.entries[i], config);
        list.arrival_dirs[i] = rec_frame.to_local((img - config.rec_pos_m).normalized());
    }
}

void fill_emission_directions(ReflectionList& list, const RoomConfig& config) {
    // Swapping endpoints maps image (n, q) per axis to (-n, q) for even
    // parity and (n, q) for odd parity; path lengths are preserved. The
    // reciprocal image position is evaluated directly instead of
    // re-enumerating the swapped room.
    const Frame src_frame = Frame::facing(config.rec_pos_m - config.src_pos_m);
    const Vec3& rec = config.rec_pos_m;
    const double rv[3] = {rec.x, rec.y, rec.z};
    const double lv[3] = {config.dims_m.x, config.dims_m.y, config.dims_m.z};

    list.emission_dirs.resize(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const ImageEntry& e = list.entries[i];
        double img[3];
        for (int axis = 0; axis < 3; ++axis) {
            const int q = (e.parity >> axis) & 1;
            const int n_recip = q == 0 ? -e.n[axis] : e.n[axis];
            img[axis] = (1 - 2 * q) * rv[axis] + 2.0 * n_recip * lv[axis];
        }
        const Vec3 dir_world =
            (Vec3{img[0], img[1], img[2]} - config.src_pos_m).normalized();
        list.emission_dirs[i] = src_frame.to_local(dir_world);
    }
}

Reflection ReflectionList::reflection(std::size_t i, const RoomConfig& config,
                                      const EngineParams& params) const {
    const ImageEntry& e = entries[i];
    Reflection r;
    r.order_index = {e.n[0], e.n[1], e.n[2]};
    r.parity = {(e.parity >> 0) & 1, (e.parity >> 1) & 1, (e.parity >> 2) & 1};
    r.image_pos_m = image_position(e, config);
    r.distance_m = e.distance_m;
    r.delay_s = e.distance_m / params.speed_of_sound_mps;
    r.amplitude = e.amplitude;
    r.wall_hit_counts = wall_hits(e);
    if (has_arrival_dirs()) r.arrival_dir = arrival_dirs[i];
    if (has_emission_dirs()) r.emission_dir = emission_dirs[i];
    return r;
}

}  // namespace rirforge
