#include "rirforge/room.hpp"

#include <cmath>

#include "rirforge/errors.hpp"
#include "rirforge/rng.hpp"

namespace rirforge {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::SB: return "sb";
        case Variant::MB: return "mb";
        case Variant::REC_MB: return "rec-mb";
        case Variant::SRC_REC_MB: return "src-rec-mb";
    }
    return "sb";
}

Variant variant_from_string(const std::string& s) {
    if (s == "sb") return Variant::SB;
    if (s == "mb") return Variant::MB;
    if (s == "rec-mb") return Variant::REC_MB;
    if (s == "src-rec-mb") return Variant::SRC_REC_MB;
    throw FormatError("unknown variant: " + s);
}

void RoomConfig::validate(const EngineParams& params) const {
    const Vec3& r = dims_m;
    if (!(r.x >= 3.0 && r.x <= 30.0)) throw FormatError(id + ": r_x out of range");
    if (!(r.y >= 0.5 * r.x && r.y <= r.x)) throw FormatError(id + ": r_y out of range");
    if (!(r.z >= 2.5 && r.z <= 5.0)) throw FormatError(id + ": r_z out of range");
    if (!(rec_pos_m.x >= 0.35 * r.x && rec_pos_m.x <= 0.65 * r.x) ||
        !(rec_pos_m.y >= 0.35 * r.y && rec_pos_m.y <= 0.65 * r.y) ||
        !(rec_pos_m.z >= 1.0 && rec_pos_m.z <= 2.0))
        throw FormatError(id + ": receiver outside inner box");
    const double d = (rec_pos_m - src_pos_m).norm();
    if (!(d >= 0.5 && d <= 3.0)) throw FormatError(id + ": source distance out of range");
    for (int i = 0; i < 3; ++i) {
        if (!(src_pos_m[i] > 0.0 && src_pos_m[i] < r[i]))
            throw FormatError(id + ": source outside room");
        if (!(rec_pos_m[i] > 0.0 && rec_pos_m[i] < r[i]))
            throw FormatError(id + ": receiver outside room");
    }
    if (t60_bands_s.size() != params.bands.bands())
        throw FormatError(id + ": t60 band count mismatch");
    double mean = 0.0;
    for (double t : t60_bands_s) {
        if (!(t > 0.0)) throw FormatError(id + ": nonpositive band t60");
        mean += t;
    }
    mean /= static_cast<double>(t60_bands_s.size());
    if (std::abs(mean - t60_scalar_s) > 1e-9 * std::max(1.0, mean))
        throw FormatError(id + ": scalar t60 is not the band mean");
}

std::vector<double> sample_t60_bands(const GammaParams& gp, std::uint64_t rng_seed,
                                     const EngineParams& params, bool* clamped_flag) {
    gp.validate();
    Rng rng(rng_seed);
    std::vector<double> out(gp.shape.size());
    bool clamped = false;
    for (std::size_t b = 0; b < gp.shape.size(); ++b) {
        double v = rng.gamma(gp.shape[b], gp.scale[b]);
        int attempts = 0;
        while ((v < params.t60_clamp_lo_s || v > params.t60_clamp_hi_s) && attempts < 100) {
            v = rng.gamma(gp.shape[b], gp.scale[b]);
            ++attempts;
        }
        if (v < params.t60_clamp_lo_s) {
            v = params.t60_clamp_lo_s;
            clamped = true;
        } else if (v > params.t60_clamp_hi_s) {
            v = params.t60_clamp_hi_s;
            clamped = true;
        }
        out[b] = v;
    }
    if (clamped_flag) *clamped_flag = clamped;
    return out;
}

RoomConfig sample_room(std::uint64_t rng_seed, Variant variant,
                       const EngineParams& params) {
    Rng rng(rng_seed);
    RoomConfig cfg;
    cfg.seed = rng_seed;
    cfg.variant = variant;

    cfg.dims_m.x = rng.uniform(3.0, 30.0);
    cfg.dims_m.y = cfg.dims_m.x * rng.uniform(0.5, 1.0);
    cfg.dims_m.z = rng.uniform(2.5, 5.0);

    cfg.rec_pos_m.x = rng.uniform(0.35 * cfg.dims_m.x, 0.65 * cfg.dims_m.x);
    cfg.rec_pos_m.y = rng.uniform(0.35 * cfg.dims_m.y, 0.65 * cfg.dims_m.y);
    cfg.rec_pos_m.z = rng.uniform(1.0, 2.0);

    bool clamped = false;
    cfg.t60_bands_s = sample_t60_bands(params.gamma, rng.next_u64(), params, &clamped);
    if (clamped) cfg.warnings.push_back("t60_clamped");
    double mean = 0.0;
    for (double t : cfg.t60_bands_s) mean += t;
    cfg.t60_scalar_s = mean / static_cast<double>(cfg.t60_bands_s.size());

    // Source placement: a base heading plus a bounded offset keeps the source
    // "in front of" the receiver once the boresight is pointed back at it.
    const double base_az = rng.uniform(-180.0, 180.0);
    bool placed = false;
    double src_az = 0.0, src_el = 0.0;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
        src_az = base_az + rng.uniform(-45.0, 45.0);
        src_el = rng.uniform(-10.0, 10.0);
        const double dist = rng.uniform(0.5, 3.0);
        const Vec3 dir = direction_from_angles(src_az, src_el);
        const Vec3 src = cfg.rec_pos_m + dir * dist;
        if (src.x > 0.0 && src.x < cfg.dims_m.x && src.y > 0.0 && src.y < cfg.dims_m.y &&
            src.z > 0.0 && src.z < cfg.dims_m.z) {
            cfg.src_pos_m = src;
            placed = true;
        }
    }
    if (!placed)
        throw PlacementFailure("source placement failed after 1000 attempts (seed " +
                               std::to_string(rng_seed) + ")");

    // Boresight toward the source, then jittered.
    cfg.rec_yaw_deg = src_az + rng.uniform(-45.0, 45.0);
    if (cfg.rec_yaw_deg >= 180.0) cfg.rec_yaw_deg -= 360.0;
    if (cfg.rec_yaw_deg < -180.0) cfg.rec_yaw_deg += 360.0;
    cfg.rec_pitch_deg = src_el + rng.uniform(-10.0, 10.0);

    return cfg;
}

double sabine_absorption(const Vec3& dims_m, double t60_s, const EngineParams& params,
                         bool* clamped_flag) {
    if (!(dims_m.x > 0.0 && dims_m.y > 0.0 && dims_m.z > 0.0))
        throw FormatError("room dimensions must be positive");
    if (!(t60_s > 0.0)) throw FormatError("t60 must be positive");
    const double volume = dims_m.x * dims_m.y * dims_m.z;
    const double surface =
        2.0 * (dims_m.x * dims_m.y + dims_m.x * dims_m.z + dims_m.y * dims_m.z);
    double alpha = params.sabine_constant * volume / (surface * t60_s);
    bool clamped = false;
    if (alpha > 0.99) {
        alpha = 0.99;
        clamped = true;
    }
    if (clamped_flag) *clamped_flag = clamped;
    return alpha;
}

}  // namespace rirforge
