#pragma once

#include <cstdint>
#include <random>

namespace sincdens {

// splitmix64 finalizer; used to whiten seeds and derive independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-derived stream: same master seed + same salts -> same stream,
// distinct salts -> statistically independent streams.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t salt1 = 0,
                                   std::uint64_t salt2 = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (salt1 * 0x9e3779b97f4a7c15ULL + 1));
    s = splitmix64(s ^ (salt2 * 0xc2b2ae3d27d4eb4fULL + 2));
    return std::mt19937_64(s);
}

}  // namespace sincdens
