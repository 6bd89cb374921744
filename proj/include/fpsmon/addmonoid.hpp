#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fpsmon
{

// A finitely generated submonoid S of (N, +).
//
// Membership is exact for every natural: a coin-problem table covers
// [0, conductor) and beyond that n is a member iff gcd | n. With no
// generators the monoid is {0}, gcd and conductor are both 0.
class AdditiveMonoid
{
public:
    // The trivial monoid {0}.
    AdditiveMonoid() = default;

    // Throws usage_error when a generator is 0. Duplicates are ignored.
    static AdditiveMonoid from_generators(std::span<const std::uint64_t> gens);

    bool contains(std::uint64_t n) const noexcept;

    const std::vector<std::uint64_t> &generators() const noexcept
    {
        return m_generators;
    }
    std::uint64_t gcd() const noexcept
    {
        return m_gcd;
    }
    // Least c >= 0 such that every n >= c divisible by gcd() is a member.
    std::uint64_t conductor() const noexcept
    {
        return m_conductor;
    }
    // Membership for 0..conductor() inclusive.
    const std::vector<bool> &table() const noexcept
    {
        return m_table;
    }

    // Non-members below the conductor.
    std::vector<std::uint64_t> gaps() const;

    // Irreducible nonzero members: those that are not a sum of two nonzero members.
    std::vector<std::uint64_t> minimal_generators() const;

    // Members in [lo, hi].
    std::vector<std::uint64_t> members(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::vector<std::uint64_t> m_generators;
    std::uint64_t m_gcd = 0;
    std::uint64_t m_conductor = 0;
    std::vector<bool> m_table{true};
};

} // namespace fpsmon
