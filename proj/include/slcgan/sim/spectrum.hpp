#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slcgan {

inline constexpr int kSpectrumBins = 512;
// Zero Doppler sits at this bin; normalized frequency f = (bin - 256) / 256.
inline constexpr int kCenterBin = 256;
inline constexpr int kNumClasses = 3;

enum class ClassLabel : std::uint8_t { sea = 0, land = 1, sea_land = 2 };

inline const char* class_name(ClassLabel c) {
    switch (c) {
        case ClassLabel::sea: return "sea";
        case ClassLabel::land: return "land";
        case ClassLabel::sea_land: return "sea_land";
    }
    throw std::invalid_argument("class_name: bad label");
}

inline ClassLabel parse_class(const std::string& s) {
    if (s == "sea" || s == "0") return ClassLabel::sea;
    if (s == "land" || s == "1") return ClassLabel::land;
    if (s == "sea_land" || s == "sea-land" || s == "2") return ClassLabel::sea_land;
    throw std::invalid_argument("unknown class label: " + s);
}

inline std::array<float, kNumClasses> one_hot(ClassLabel c) {
    std::array<float, kNumClasses> v{0.f, 0.f, 0.f};
    v[static_cast<std::size_t>(c)] = 1.f;
    return v;
}

struct SpectrumSample {
    std::vector<float> bins;  // length 512, min-max normalized to [-1, 1]
    ClassLabel label = ClassLabel::sea;

    bool valid() const {
        if (bins.size() != kSpectrumBins) return false;
        for (float v : bins)
            if (!(v >= -1.f && v <= 1.f)) return false;
        return true;
    }
};

// Rescale a nonnegative amplitude buffer to [-1, 1] in place, min -> -1 and
// max -> +1. Degenerate (flat) input maps to all zeros.
inline void minmax_normalize(std::vector<float>& v) {
    float lo = v[0], hi = v[0];
    for (float x : v) {
        lo = x < lo ? x : lo;
        hi = x > hi ? x : hi;
    }
    const float range = hi - lo;
    if (!(range > 0.f)) {
        std::fill(v.begin(), v.end(), 0.f);
        return;
    }
    for (float& x : v) {
        x = 2.f * (x - lo) / range - 1.f;
        x = x < -1.f ? -1.f : (x > 1.f ? 1.f : x);
    }
}

}  // namespace slcgan
