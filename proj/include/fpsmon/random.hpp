#pragma once

#include <cstdint>

namespace fpsmon
{

// SplitMix64. Each draw advances the state by 0x9E3779B97F4A7C15 and
// returns the mixed state:
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Bounded draws reduce the raw output modulo the range size, so any port of
// this generator reproduces the same sampled cases.
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : m_state(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (m_state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi] (inclusive), hi >= lo.
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() noexcept
    {
        return (next() >> 63) != 0;
    }

private:
    std::uint64_t m_state;
};

} // namespace fpsmon
