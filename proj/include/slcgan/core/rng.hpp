#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <random>

namespace slcgan {

// Deterministic random stream. mt19937_64 is fully specified by the standard,
// and every distribution here is implemented on top of its raw output, so a
// given seed yields the same draws on any conforming platform (std::
// distributions do not give that guarantee).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed), seed_mix_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller. Exactly two raw draws per call; no
    // cached spare, so the stream position is a pure function of call count.
    double normal() {
        double u1 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * std::numbers::pi * uniform();
        return r * std::cos(th);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Uniform integer in [0, n). Multiply-shift map: bias is n/2^64,
    // negligible for our n and identical everywhere.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = uniform_int(i);
            std::swap(first[i - 1], first[j]);
        }
    }

    // Derived stream for a worker/sample index: draws are independent of how
    // work is split across workers. splitmix64 finisher mixes seed and index.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t x = seed_mix_ + 0x9e3779b97f4a7c15ull * (stream + 1);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

    void reseed(std::uint64_t seed) {
        eng_.seed(seed);
        seed_mix_ = seed;
    }

    // The mt19937_64 stream state in the standard's text format.
    std::string state() const {
        std::ostringstream os;
        os << seed_mix_ << ' ' << eng_;
        return os.str();
    }

    void set_state(const std::string& s) {
        std::istringstream is(s);
        is >> seed_mix_ >> eng_;
        if (!is) throw std::runtime_error("Rng::set_state: malformed state string");
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t seed_mix_ = 0;

    friend bool operator==(const Rng& a, const Rng& b) { return a.eng_ == b.eng_; }
};

}  // namespace slcgan
