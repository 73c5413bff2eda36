#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hcncov {

// Identifies one reproducible random stream. Engines built from identical
// (seed, stream_id) pairs produce bit-identical draw sequences no matter
// where or in which order they are created, which is what makes trial-level
// parallelism deterministic.
struct RngStream {
   std::uint64_t seed      = 0;
   std::uint64_t stream_id = 0;
};

namespace detail {

// splitmix64 output function; used only to key engines, never as the
// simulation generator itself.
inline std::uint64_t splitmix64(std::uint64_t z)
{
   z += 0x9E3779B97F4A7C15ull;
   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
   z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
   return z ^ (z >> 31);
}

} // namespace detail

inline std::mt19937_64 make_engine(RngStream s)
{
   return std::mt19937_64{detail::splitmix64(detail::splitmix64(s.seed) + s.stream_id)};
}

// Uniform draw in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng)
{
   return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unit-mean exponential draw.
inline double exp_unit(std::mt19937_64& eng)
{
   return -std::log1p(-uniform01(eng));
}

} // namespace hcncov
