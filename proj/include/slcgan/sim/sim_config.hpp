#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "slcgan/core/hash.hpp"

namespace slcgan {

// Shape of the synthetic clutter generator. Frequency quantities are in
// normalized Doppler units (bin 256 is zero, |f| = 1 at the band edge).
struct SimConfig {
    double bragg_offset = 0.35;      // Bragg pair position, in (0, 1)
    double bragg_ratio_db = 3.0;     // dominant / sub-dominant peak ratio
    double peak_width = 0.02;        // Gaussian sigma per peak, normalized freq
    double noise_floor_db = -30.0;   // mean floor level below the 0 dB peak
    double doppler_shift_std = 3.0;  // whole-spectrum shift std, in bins
    double spread_prob = 0.15;       // chance of spectral spreading
    double rfi_prob = 0.15;          // chance of narrowband interference
    std::uint64_t seed = 0;

    // Secondary tunables (the headline knobs above set the class geometry;
    // these control within-class variability).
    double noise_jitter_db = 5.0;    // per-bin floor jitter std, 0 disables noise
    double height_jitter_db = 2.0;   // per-peak height jitter half-range
    double width_jitter = 0.25;      // per-peak width multiplier half-range
    double spread_sigma_bins = 4.0;  // smoothing kernel sigma for `spread`
    int rfi_max_spikes = 3;          // `rfi` draws 1..max spikes

    void validate() const {
        auto bad = [](const std::string& m) { throw std::invalid_argument("SimConfig: " + m); };
        if (!(bragg_offset > 0.0 && bragg_offset < 1.0)) bad("bragg_offset must be in (0,1)");
        if (!(peak_width > 0.0)) bad("peak_width must be > 0");
        if (!(spread_prob >= 0.0 && spread_prob <= 1.0)) bad("spread_prob must be in [0,1]");
        if (!(rfi_prob >= 0.0 && rfi_prob <= 1.0)) bad("rfi_prob must be in [0,1]");
        if (!(noise_floor_db < 0.0)) bad("noise_floor_db must be negative (below peak)");
        if (!(doppler_shift_std >= 0.0)) bad("doppler_shift_std must be >= 0");
        if (!(noise_jitter_db >= 0.0)) bad("noise_jitter_db must be >= 0");
        if (!(width_jitter >= 0.0 && width_jitter < 1.0)) bad("width_jitter must be in [0,1)");
        if (!(spread_sigma_bins > 0.0)) bad("spread_sigma_bins must be > 0");
        if (rfi_max_spikes < 1) bad("rfi_max_spikes must be >= 1");
    }
};

inline void to_json(nlohmann::json& j, const SimConfig& c) {
    j = nlohmann::json{{"bragg_offset", c.bragg_offset},
                       {"bragg_ratio_db", c.bragg_ratio_db},
                       {"peak_width", c.peak_width},
                       {"noise_floor_db", c.noise_floor_db},
                       {"doppler_shift_std", c.doppler_shift_std},
                       {"spread_prob", c.spread_prob},
                       {"rfi_prob", c.rfi_prob},
                       {"seed", c.seed},
                       {"noise_jitter_db", c.noise_jitter_db},
                       {"height_jitter_db", c.height_jitter_db},
                       {"width_jitter", c.width_jitter},
                       {"spread_sigma_bins", c.spread_sigma_bins},
                       {"rfi_max_spikes", c.rfi_max_spikes}};
}

inline void from_json(const nlohmann::json& j, SimConfig& c) {
    c = SimConfig{};
    c.bragg_offset = j.value("bragg_offset", c.bragg_offset);
    c.bragg_ratio_db = j.value("bragg_ratio_db", c.bragg_ratio_db);
    c.peak_width = j.value("peak_width", c.peak_width);
    c.noise_floor_db = j.value("noise_floor_db", c.noise_floor_db);
    c.doppler_shift_std = j.value("doppler_shift_std", c.doppler_shift_std);
    c.spread_prob = j.value("spread_prob", c.spread_prob);
    c.rfi_prob = j.value("rfi_prob", c.rfi_prob);
    c.seed = j.value("seed", c.seed);
    c.noise_jitter_db = j.value("noise_jitter_db", c.noise_jitter_db);
    c.height_jitter_db = j.value("height_jitter_db", c.height_jitter_db);
    c.width_jitter = j.value("width_jitter", c.width_jitter);
    c.spread_sigma_bins = j.value("spread_sigma_bins", c.spread_sigma_bins);
    c.rfi_max_spikes = j.value("rfi_max_spikes", c.rfi_max_spikes);
}

inline std::string sim_config_hash(const SimConfig& c) {
    nlohmann::json j = c;
    const std::string s = j.dump();
    return hex64(fnv1a64(s.data(), s.size()));
}

}  // namespace slcgan
