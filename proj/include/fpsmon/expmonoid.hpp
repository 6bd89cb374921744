#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <fpsmon/addmonoid.hpp>

namespace fpsmon
{

// Membership predicate for a subset of the positive integers.
using MembershipFn = std::function<bool(std::uint64_t)>;

// Outcome of a bounded certification. A failing verdict always carries a
// witness that can be re-checked on its own.
struct Verdict {
    bool holds = true;
    std::vector<std::uint64_t> witness;
    std::string detail;

    static Verdict pass()
    {
        return {};
    }
    static Verdict fail(std::vector<std::uint64_t> w, std::string detail)
    {
        return {false, std::move(w), std::move(detail)};
    }
};

// A strongly closed submonoid T of the positive integers, stored through
// its additive shadow S = T - 1.
class StrongMonoid
{
public:
    // T = {1}.
    StrongMonoid() = default;
    explicit StrongMonoid(AdditiveMonoid shadow, std::optional<std::vector<std::uint64_t>> origin = std::nullopt)
        : m_shadow(std::move(shadow)), m_origin(std::move(origin))
    {
    }

    bool contains(std::uint64_t t) const noexcept
    {
        return t >= 1 && m_shadow.contains(t - 1);
    }
    MembershipFn predicate() const
    {
        return [shadow = m_shadow](std::uint64_t t) { return t >= 1 && shadow.contains(t - 1); };
    }

    const AdditiveMonoid &shadow() const noexcept
    {
        return m_shadow;
    }
    const std::optional<std::vector<std::uint64_t>> &origin_generators() const noexcept
    {
        return m_origin;
    }

    // Minimal X with T = strong_closure(X), i.e. 1 + minimal additive generators.
    std::vector<std::uint64_t> minimal_generators() const;
    std::vector<std::uint64_t> members(std::uint64_t bound) const;

private:
    AdditiveMonoid m_shadow;
    std::optional<std::vector<std::uint64_t>> m_origin;
};

// T = 1 + <X - 1>; elements equal to 1 contribute nothing.
StrongMonoid strong_closure(std::span<const std::uint64_t> gens);

AdditiveMonoid to_additive(const StrongMonoid &t);
StrongMonoid from_additive(const AdditiveMonoid &s);

// 1 in T and s + t - 1 in T for all s, t in T with s + t - 1 <= bound.
// The witness is the lexicographically least violating (s, t); a missing 1
// is reported with the witness (1).
Verdict is_strongly_closed(const MembershipFn &member, std::uint64_t bound);

// Brute force over every s in T with s <= s_max, every composition
// s = s_1 + ... + s_k with positive parts (lexicographic order), and every
// (t_1, ..., t_k) in T^k with sum s_i t_i <= bound. The witness is laid out as
// (s, k, s_1..s_k, t_1..t_k, sum).
Verdict satisfies_partition_condition(const MembershipFn &member, std::uint64_t bound, std::uint64_t s_max);

// st in T for every s, t in T with st <= bound; witness (s, t, st).
Verdict is_mult_closed(const MembershipFn &member, std::uint64_t bound);

// Least subset of 1..bound containing X and 1 that is closed under
// (s, t) -> s + t - 1 as long as the result stays <= bound.
std::vector<bool> fixed_point_closure(std::span<const std::uint64_t> gens, std::uint64_t bound);

struct PrimeWitnesses {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> steps; // k with p = a + k(a - 1)
    bool complete = false;            // false when fewer than requested were found
};

// First `count` primes of the form a + k(a - 1), 0 <= k <= k_max.
PrimeWitnesses multiplicative_prime_witnesses(std::uint64_t a, std::size_t count, std::uint64_t k_max);

// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

} // namespace fpsmon
