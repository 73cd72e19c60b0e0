#pragma once

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ntopo {

// Warnings go to stderr; callers that care about counts keep their own.
inline void warn(const std::string& msg) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "warning: " << msg << "\n";
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v);

// Round-trip double formatting used by every text artifact, so dumps are
// byte-stable across runs.
std::string fmt_double(double v);
std::string fmt_double_short(double v);  // %.6g, for plots

// splitmix64; used to derive independent stream seeds from a master seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform helpers on top of mt19937_64. std::uniform_*_distribution is
// implementation-defined, so draws go through these to keep artifacts
// reproducible across standard libraries.
inline double rng_unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline uint64_t rng_below(std::mt19937_64& g, uint64_t n) {
    // modulo with rejection of the biased tail
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % n;
}

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string lower_ascii(std::string_view s);

}  // namespace ntopo
