#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace optonet {

// Deterministic randomness for the whole toolkit.
//
// std::mt19937_64's output sequence is pinned by the standard, but the
// std::*_distribution adaptors are not, so every draw here is built by hand
// from raw 64-bit words. Identical seeds therefore yield identical streams
// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // [0,1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n) via bitmask rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t mask = ~std::uint64_t{0};
        std::uint64_t limit = n - 1;
        // Smallest all-ones mask covering n-1.
        if (limit == 0) return 0;
        mask >>= __builtin_clzll(limit);
        for (;;) {
            std::uint64_t candidate = next_u64() & mask;
            if (candidate <= limit) return candidate;
        }
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    // Fisher-Yates, descending, one below() per step.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = index(i);
            using std::swap;
            swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// FNV-1a over the bytes of `text`.
constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent child stream for a named unit of work (one dataset cell, one
// replicate, ...). Distinct keys give uncorrelated seeds; the derivation is
// pure, so any cell can be regenerated in isolation.
constexpr std::uint64_t derive_stream(std::uint64_t master_seed, std::string_view key) {
    return splitmix64(master_seed ^ fnv1a64(key));
}

}  // namespace optonet
