#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace ctrlab {

// 64-bit FNV-1a. Used for seed derivation keys and config hashes.
inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Every stage/stream seed is derived from the global seed and a name, so one
// seed in the config reproduces the whole pipeline and streams stay
// independent of each other.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view name) {
    return splitmix64(global_seed ^ fnv1a64(name));
}

inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view name,
                                 std::uint64_t salt) {
    return splitmix64(global_seed ^ fnv1a64(name) ^ splitmix64(salt));
}

// mt19937_64 output is pinned by the standard, so streams reproduce across
// platforms. The distribution helpers are hand-rolled for the same reason:
// std::uniform_real_distribution and friends differ between libstdc++ and
// libc++, which would break byte-identical pipeline reruns.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). Modulo bias is irrelevant at desk scale.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(gen_() % n);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // One Box-Muller draw per call; the sine half is discarded to keep the
    // stream position a simple function of the call count.
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    std::uint64_t binomial(std::uint64_t n, double p) {
        if (p <= 0.0) return 0;
        if (p >= 1.0) return n;
        std::uint64_t k = 0;
        for (std::uint64_t i = 0; i < n; ++i) k += bernoulli(p) ? 1 : 0;
        return k;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ctrlab
