#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netfit {

using Seed = std::uint64_t;

__extension__ using uint128 = unsigned __int128;

/// Seeded random source with portable integer and real mappings.
///
/// The std distributions are implementation-defined, so the same seed can
/// give different graphs on different standard libraries. Everything here is
/// built on the raw 64-bit output of mt19937_64, which is fully specified.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound) {
        // Lemire's nearly-divisionless rejection method.
        uint128 product = static_cast<uint128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<uint128>(next()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    template <typename It>
    void shuffle(It first, It last) {
        const auto count = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = count; i > 1; --i) {
            const auto j = uniform_index(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Child seed for job `index` of a batch driven by `master`.
constexpr Seed derive_seed(Seed master, std::uint64_t index) { return mix64(master ^ index); }

/// FNV-1a 64; stable across platforms, used for per-name seed derivation.
constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace netfit
