#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slcgan {

// All on-disk binary payloads are little-endian IEEE-754 float32 / uint8, as
// the file extensions (.f32le, .u8) declare. On big-endian hosts the float
// paths byte-swap; everywhere else they are straight memcpy.

inline void write_file_bytes(const std::filesystem::path& p, const void* data, std::size_t n) {
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for write: " + p.string());
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!os) throw std::runtime_error("short write: " + p.string());
}

inline std::vector<unsigned char> read_file_bytes(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary | std::ios::ate);
    if (!is) throw std::runtime_error("cannot open for read: " + p.string());
    const auto n = static_cast<std::size_t>(is.tellg());
    std::vector<unsigned char> buf(n);
    is.seekg(0);
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
    if (!is) throw std::runtime_error("short read: " + p.string());
    return buf;
}

inline void write_f32le(const std::filesystem::path& p, const float* v, std::size_t count) {
    static_assert(sizeof(float) == 4);
    if constexpr (std::endian::native == std::endian::little) {
        write_file_bytes(p, v, count * 4);
    } else {
        std::vector<unsigned char> buf(count * 4);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint32_t u;
            std::memcpy(&u, &v[i], 4);
            buf[4 * i + 0] = static_cast<unsigned char>(u & 0xff);
            buf[4 * i + 1] = static_cast<unsigned char>((u >> 8) & 0xff);
            buf[4 * i + 2] = static_cast<unsigned char>((u >> 16) & 0xff);
            buf[4 * i + 3] = static_cast<unsigned char>((u >> 24) & 0xff);
        }
        write_file_bytes(p, buf.data(), buf.size());
    }
}

inline std::vector<float> read_f32le(const std::filesystem::path& p) {
    auto bytes = read_file_bytes(p);
    if (bytes.size() % 4 != 0) throw std::runtime_error("f32le size not multiple of 4: " + p.string());
    std::vector<float> out(bytes.size() / 4);
    if constexpr (std::endian::native == std::endian::little) {
        std::memcpy(out.data(), bytes.data(), bytes.size());
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint32_t u = static_cast<std::uint32_t>(bytes[4 * i]) |
                              (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
                              (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
                              (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
            std::memcpy(&out[i], &u, 4);
        }
    }
    return out;
}

inline void write_text(const std::filesystem::path& p, const std::string& s) {
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for write: " + p.string());
    os << s;
}

inline std::string read_text(const std::filesystem::path& p) {
    auto b = read_file_bytes(p);
    return std::string(b.begin(), b.end());
}

}  // namespace slcgan
