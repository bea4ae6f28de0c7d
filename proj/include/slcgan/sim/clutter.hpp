#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slcgan/core/rng.hpp"
#include "slcgan/sim/sim_config.hpp"
#include "slcgan/sim/spectrum.hpp"

namespace slcgan {

enum class PerturbKind { doppler_shift, spread, rfi };

inline PerturbKind parse_perturb_kind(const std::string& s) {
    if (s == "doppler_shift") return PerturbKind::doppler_shift;
    if (s == "spread") return PerturbKind::spread;
    if (s == "rfi") return PerturbKind::rfi;
    throw std::invalid_argument("unknown perturbation kind: " + s);
}

namespace detail {

struct Peak {
    double freq;       // normalized center
    double level_db;   // peak level, 0 dB = strongest
    double sigma;      // normalized width
};

// Compose Gaussian bumps over a noisy floor in the dB domain, convert to
// linear amplitude, min-max normalize.
inline SpectrumSample render_spectrum(const std::vector<Peak>& peaks, ClassLabel label,
                                      const SimConfig& cfg, Rng& rng) {
    std::vector<float> bins(kSpectrumBins);
    std::vector<double> jitter(kSpectrumBins, 0.0);
    if (cfg.noise_jitter_db > 0.0)
        for (auto& v : jitter) v = rng.normal(0.0, cfg.noise_jitter_db);
    for (int b = 0; b < kSpectrumBins; ++b) {
        const double f = (b - kCenterBin) / static_cast<double>(kCenterBin);
        double excess = 0.0;  // dB above the floor, max over peaks
        for (const auto& p : peaks) {
            const double d = f - p.freq;
            const double bump =
                (p.level_db - cfg.noise_floor_db) * std::exp(-d * d / (2.0 * p.sigma * p.sigma));
            excess = std::max(excess, bump);
        }
        const double level_db = cfg.noise_floor_db + jitter[b] + excess;
        bins[b] = static_cast<float>(std::pow(10.0, level_db / 20.0));
    }
    minmax_normalize(bins);
    return SpectrumSample{std::move(bins), label};
}

inline double jittered_height(double base_db, const SimConfig& cfg, Rng& rng) {
    if (cfg.height_jitter_db <= 0.0) return base_db;
    return base_db + rng.uniform(-cfg.height_jitter_db, cfg.height_jitter_db);
}

inline double jittered_width(const SimConfig& cfg, Rng& rng) {
    if (cfg.width_jitter <= 0.0) return cfg.peak_width;
    return cfg.peak_width * rng.uniform(1.0 - cfg.width_jitter, 1.0 + cfg.width_jitter);
}

}  // namespace detail

// Sea clutter: Bragg pair symmetric about zero Doppler, one line dominant.
inline SpectrumSample synth_sea(const SimConfig& cfg, Rng& rng) {
    const double dom_side = rng.uniform() < 0.5 ? 1.0 : -1.0;
    std::vector<detail::Peak> peaks{
        {dom_side * cfg.bragg_offset, detail::jittered_height(0.0, cfg, rng),
         detail::jittered_width(cfg, rng)},
        {-dom_side * cfg.bragg_offset,
         detail::jittered_height(-cfg.bragg_ratio_db, cfg, rng),
         detail::jittered_width(cfg, rng)}};
    return detail::render_spectrum(peaks, ClassLabel::sea, cfg, rng);
}

// Land clutter: stationary scatterers, single peak at zero Doppler.
inline SpectrumSample synth_land(const SimConfig& cfg, Rng& rng) {
    std::vector<detail::Peak> peaks{
        {0.0, detail::jittered_height(0.0, cfg, rng), detail::jittered_width(cfg, rng)}};
    return detail::render_spectrum(peaks, ClassLabel::land, cfg, rng);
}

// Boundary cell: land peak plus the Bragg pair, triple-peak structure.
inline SpectrumSample synth_boundary(const SimConfig& cfg, Rng& rng) {
    std::vector<detail::Peak> peaks{
        {0.0, detail::jittered_height(0.0, cfg, rng), detail::jittered_width(cfg, rng)},
        {cfg.bragg_offset, detail::jittered_height(-cfg.bragg_ratio_db, cfg, rng),
         detail::jittered_width(cfg, rng)},
        {-cfg.bragg_offset, detail::jittered_height(-cfg.bragg_ratio_db, cfg, rng),
         detail::jittered_width(cfg, rng)}};
    return detail::render_spectrum(peaks, ClassLabel::sea_land, cfg, rng);
}

inline SpectrumSample synth_class(ClassLabel c, const SimConfig& cfg, Rng& rng) {
    switch (c) {
        case ClassLabel::sea: return synth_sea(cfg, rng);
        case ClassLabel::land: return synth_land(cfg, rng);
        case ClassLabel::sea_land: return synth_boundary(cfg, rng);
    }
    throw std::invalid_argument("synth_class: bad label");
}

namespace detail {

inline void apply_doppler_shift(SpectrumSample& s, int shift_bins) {
    if (shift_bins == 0) return;
    int k = shift_bins % kSpectrumBins;
    if (k < 0) k += kSpectrumBins;
    std::rotate(s.bins.begin(), s.bins.begin() + (kSpectrumBins - k), s.bins.end());
}

inline void apply_spread(SpectrumSample& s, double sigma_bins) {
    // Circular smoothing of the nonnegative mass (x+1)/2, then renormalize.
    const int half = std::max(1, static_cast<int>(std::ceil(4.0 * sigma_bins)));
    std::vector<double> kernel(2 * half + 1);
    double ksum = 0.0;
    for (int i = -half; i <= half; ++i) {
        kernel[i + half] = std::exp(-i * i / (2.0 * sigma_bins * sigma_bins));
        ksum += kernel[i + half];
    }
    for (auto& k : kernel) k /= ksum;
    std::vector<float> out(kSpectrumBins);
    for (int b = 0; b < kSpectrumBins; ++b) {
        double acc = 0.0;
        for (int i = -half; i <= half; ++i) {
            int src = (b + i) % kSpectrumBins;
            if (src < 0) src += kSpectrumBins;
            acc += kernel[i + half] * (0.5 * (s.bins[src] + 1.0));
        }
        out[b] = static_cast<float>(acc);
    }
    minmax_normalize(out);
    s.bins = std::move(out);
}

inline void apply_rfi(SpectrumSample& s, int num_spikes, Rng& rng) {
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < num_spikes) {
        const int b = static_cast<int>(rng.uniform_int(kSpectrumBins));
        if (std::find(chosen.begin(), chosen.end(), b) == chosen.end()) chosen.push_back(b);
    }
    for (int b : chosen) {
        const float spike = static_cast<float>(rng.uniform(0.5, 1.5));
        s.bins[b] = std::min(1.f, s.bins[b] + spike);
    }
}

}  // namespace detail

// Label and length are invariant under every kind.
inline SpectrumSample perturb(const SpectrumSample& sample, PerturbKind kind,
                              const SimConfig& cfg, Rng& rng) {
    if (!sample.valid()) throw std::invalid_argument("perturb: invalid sample");
    SpectrumSample out = sample;
    switch (kind) {
        case PerturbKind::doppler_shift: {
            const int k = static_cast<int>(std::llround(rng.normal(0.0, cfg.doppler_shift_std)));
            detail::apply_doppler_shift(out, k);
            return out;
        }
        case PerturbKind::spread:
            detail::apply_spread(out, cfg.spread_sigma_bins);
            return out;
        case PerturbKind::rfi: {
            const int k = 1 + static_cast<int>(rng.uniform_int(
                                  static_cast<std::uint64_t>(cfg.rfi_max_spikes)));
            detail::apply_rfi(out, k, rng);
            return out;
        }
    }
    throw std::invalid_argument("perturb: unknown kind");
}

// One dataset draw: clean synthesis, then the degraded-condition pipeline
// (always a random Doppler shift; spreading and interference by probability).
inline SpectrumSample draw_sample(ClassLabel c, const SimConfig& cfg, Rng& rng) {
    SpectrumSample s = synth_class(c, cfg, rng);
    s = perturb(s, PerturbKind::doppler_shift, cfg, rng);
    if (rng.uniform() < cfg.spread_prob) s = perturb(s, PerturbKind::spread, cfg, rng);
    if (rng.uniform() < cfg.rfi_prob) s = perturb(s, PerturbKind::rfi, cfg, rng);
    return s;
}

}  // namespace slcgan
