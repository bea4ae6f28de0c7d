#pragma once

#include <cstdint>
#include <cstring>
#include <string>

namespace slcgan {

// FNV-1a. Collision tripwire for "did these bytes change", not cryptography.
inline std::uint64_t fnv1a64(const void* bytes, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

template <typename T>
std::uint64_t fnv1a64_span(const T* v, std::size_t count, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a64(v, count * sizeof(T), h);
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace slcgan
