#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <optional>

#include <fpsmon/errors.hpp>
#include <fpsmon/expmonoid.hpp>
#include <fpsmon/random.hpp>
#include <fpsmon/verify.hpp>

#include "oracles.hpp"

using namespace fpsmon;

using gens_t = std::vector<std::uint64_t>;

namespace
{

MembershipFn odds()
{
    return [](std::uint64_t t) { return t % 2 == 1; };
}

MembershipFn one_and_evens()
{
    return [](std::uint64_t t) { return t == 1 || (t >= 2 && t % 2 == 0); };
}

// Naive condition (b): every composition of every s <= s_max, every tuple in
// T^k drawn from 1..bound, no pruning beyond the sum bound. Returns the first
// violation as (s, k, parts..., ts..., sum).
std::optional<gens_t> naive_partition_violation(const MembershipFn &member, std::uint64_t bound,
                                                std::uint64_t s_max)
{
    std::optional<gens_t> found;
    std::function<void(std::uint64_t, gens_t &)> comps;
    std::function<void(const gens_t &, std::size_t, gens_t &, std::uint64_t, std::uint64_t)> tuples;
    std::uint64_t current_s = 0;

    tuples = [&](const gens_t &parts, std::size_t j, gens_t &ts, std::uint64_t acc, std::uint64_t) {
        if (found) {
            return;
        }
        if (j == parts.size()) {
            if (!member(acc)) {
                gens_t w{current_s, parts.size()};
                w.insert(w.end(), parts.begin(), parts.end());
                w.insert(w.end(), ts.begin(), ts.end());
                w.push_back(acc);
                found = w;
            }
            return;
        }
        for (std::uint64_t t = 1; t <= bound; ++t) {
            if (!member(t) || acc + parts[j] * t > bound) {
                continue;
            }
            ts.push_back(t);
            tuples(parts, j + 1, ts, acc + parts[j] * t, 0);
            ts.pop_back();
            if (found) {
                return;
            }
        }
    };
    comps = [&](std::uint64_t remaining, gens_t &parts) {
        if (found) {
            return;
        }
        if (remaining == 0) {
            gens_t ts;
            tuples(parts, 0, ts, 0, 0);
            return;
        }
        for (std::uint64_t p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            comps(remaining - p, parts);
            parts.pop_back();
        }
    };
    if (!member(1)) {
        return gens_t{1};
    }
    for (std::uint64_t s = 1; s <= s_max && !found; ++s) {
        if (!member(s)) {
            continue;
        }
        current_s = s;
        gens_t parts;
        comps(s, parts);
    }
    return found;
}

} // namespace

TEST_CASE("strong closure examples")
{
    const auto t3 = strong_closure(gens_t{3});
    const auto fixed = oracle::iterate_c_closure({3}, 100);
    for (std::uint64_t t = 1; t <= 100; ++t) {
        CHECK(t3.contains(t) == (t % 2 == 1));
        CHECK(t3.contains(t) == (fixed.count(t) == 1));
    }

    const auto t2 = strong_closure(gens_t{2});
    for (std::uint64_t t = 1; t <= 100; ++t) {
        CHECK(t2.contains(t));
    }
    CHECK_FALSE(t2.contains(0));

    // 1 + <3,5>.
    const auto t46 = strong_closure(gens_t{4, 6});
    CHECK(t46.members(12) == gens_t{1, 4, 6, 7, 9, 10, 11, 12});
    const auto dp = oracle::coin_dp({3, 5}, 100);
    for (std::uint64_t t = 1; t <= 100; ++t) {
        CHECK(t46.contains(t) == dp[t - 1]);
    }
    CHECK(t46.minimal_generators() == gens_t{4, 6});
    CHECK(t46.origin_generators() == gens_t{4, 6});

    CHECK_THROWS_AS(strong_closure(gens_t{0, 3}), usage_error);
    CHECK(strong_closure(gens_t{1}).members(10) == gens_t{1});
}

TEST_CASE("is_strongly_closed examples")
{
    auto v = is_strongly_closed(one_and_evens(), 10);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == gens_t{2, 2});
    CHECK(v.detail == "s=2 t=2 s+t-1=3 not in T");

    // U = {1, k, k+1, ...} for k = 5.
    CHECK(is_strongly_closed([](std::uint64_t t) { return t == 1 || t >= 5; }, 50).holds);
    // V: exponents = 1 mod 3.
    CHECK(is_strongly_closed([](std::uint64_t t) { return t % 3 == 1; }, 50).holds);

    CHECK_FALSE(is_strongly_closed([](std::uint64_t t) { return t == 2; }, 5).holds);
    CHECK_THROWS_AS(is_strongly_closed(odds(), 0), usage_error);
}

TEST_CASE("partition condition examples")
{
    CHECK(satisfies_partition_condition(odds(), 40, 7).holds);

    auto v = satisfies_partition_condition(one_and_evens(), 12, 4);
    CHECK_FALSE(v.holds);
    // s = 2 = 1 + 1, (t_1, t_2) = (1, 2), sum 3.
    CHECK(v.witness == gens_t{2, 2, 1, 1, 1, 2, 3});

    for (std::uint64_t b : {1u, 5u, 20u}) {
        CHECK(satisfies_partition_condition([](std::uint64_t t) { return t == 1; }, b, 1).holds);
    }
    CHECK_THROWS_AS(satisfies_partition_condition(odds(), 5, 6), usage_error);
}

TEST_CASE("guided partition search matches naive enumeration")
{
    SplitMix64 rng(11);
    for (int i = 0; i < 150; ++i) {
        gens_t elems{1};
        for (std::uint64_t t = 2; t <= 18; ++t) {
            if (rng.between(0, 2) != 0) {
                elems.push_back(t);
            }
        }
        const auto member = explicit_set(elems);
        const auto fast = satisfies_partition_condition(member, 18, 4);
        const auto slow = naive_partition_violation(member, 18, 4);
        CAPTURE(elems);
        REQUIRE(fast.holds == !slow.has_value());
        if (slow) {
            CHECK(fast.witness == *slow);
        }
    }
}

TEST_CASE("(b) and (c) agree on strong closures and small-element random sets")
{
    // Exhaustive: X subsets of {2..12}, |X| <= 3.
    std::vector<gens_t> family{{}};
    for (std::uint64_t a = 2; a <= 12; ++a) {
        family.push_back({a});
        for (std::uint64_t b = a + 1; b <= 12; ++b) {
            family.push_back({a, b});
        }
    }
    for (const auto &x : family) {
        const auto m = strong_closure(x).predicate();
        CHECK(is_strongly_closed(m, 60).holds);
        CHECK(satisfies_partition_condition(m, 60, 6).holds);
    }
}

TEST_CASE("bounded (b) can miss (c) violations above s_max")
{
    // T = {1, 4} ∪ [7, 60] minus {9, 12, 15}: (8, 8) -> 15 breaks (c), but every
    // weighted sum reachable from s <= 6 that is divisible by 3 is at least 18.
    gens_t elems{1, 4};
    for (std::uint64_t t = 7; t <= 60; ++t) {
        if (t != 9 && t != 12 && t != 15) {
            elems.push_back(t);
        }
    }
    const auto member = explicit_set(elems);
    const auto c = is_strongly_closed(member, 60);
    CHECK_FALSE(c.holds);
    CHECK(c.witness == gens_t{8, 8});
    CHECK(satisfies_partition_condition(member, 60, 6).holds);
    // Raising s_max to 8 exposes it through s = 8 = 1 + ... + 1.
    CHECK_FALSE(satisfies_partition_condition(member, 60, 8).holds);
}

TEST_CASE("fixed point closure agrees with the closure formula")
{
    for (std::uint64_t a = 2; a <= 12; ++a) {
        for (std::uint64_t b = a; b <= 12; ++b) {
            const gens_t x{a, b};
            const auto t = strong_closure(x);
            const auto lib = fixed_point_closure(x, 100);
            const auto ref = oracle::iterate_c_closure(x, 100);
            for (std::uint64_t n = 1; n <= 100; ++n) {
                REQUIRE(t.contains(n) == lib[n]);
                REQUIRE(lib[n] == (ref.count(n) == 1));
            }
        }
    }
}

TEST_CASE("additive shadow bijection")
{
    const auto s_odds = to_additive(strong_closure(gens_t{3}));
    for (std::uint64_t n = 0; n < 50; ++n) {
        CHECK(s_odds.contains(n) == (n % 2 == 0));
    }
    CHECK(from_additive(AdditiveMonoid()).members(20) == gens_t{1});

    const auto s35 = AdditiveMonoid::from_generators(gens_t{3, 5});
    const auto t = from_additive(s35);
    const auto back = to_additive(t);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        CHECK(t.contains(n) == s35.contains(n - 1));
        CHECK(back.contains(n) == s35.contains(n));
    }

    SplitMix64 rng(5);
    for (int i = 0; i < 100; ++i) {
        gens_t y;
        for (int j = 0, k = static_cast<int>(rng.between(0, 3)); j < k; ++j) {
            y.push_back(static_cast<std::uint64_t>(rng.between(1, 20)));
        }
        const auto s = AdditiveMonoid::from_generators(y);
        const auto round = to_additive(from_additive(s));
        for (std::uint64_t n = 0; n <= 200; ++n) {
            REQUIRE(round.contains(n) == s.contains(n));
        }
        const auto tt = from_additive(s);
        for (std::uint64_t n = 1; n <= 200; ++n) {
            REQUIRE(tt.contains(n) == s.contains(n - 1));
        }
    }
}

TEST_CASE("multiplicative closure")
{
    CHECK(is_mult_closed(odds(), 200).holds);
    CHECK(is_mult_closed(strong_closure(gens_t{4, 6}).predicate(), 200).holds);
    // {1, 2, 4, 6, ...} is multiplicatively closed but not strongly closed.
    CHECK(is_mult_closed(one_and_evens(), 20).holds);
    CHECK_FALSE(is_strongly_closed(one_and_evens(), 20).holds);

    auto v = is_mult_closed(explicit_set({1, 2, 3}), 10);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == gens_t{2, 2, 4});

    for (std::uint64_t a = 2; a <= 12; ++a) {
        for (std::uint64_t b = a; b <= 12; ++b) {
            CHECK(is_mult_closed(strong_closure(gens_t{a, b}).predicate(), 400).holds);
        }
    }
}

TEST_CASE("prime witnesses")
{
    auto w3 = multiplicative_prime_witnesses(3, 4, 1000);
    CHECK(w3.primes == gens_t{3, 5, 7, 11});
    CHECK(w3.steps == gens_t{0, 1, 2, 4});
    CHECK(w3.complete);

    auto w4 = multiplicative_prime_witnesses(4, 3, 1000);
    CHECK(w4.primes == gens_t{7, 13, 19});
    CHECK(w4.steps == gens_t{1, 3, 5});

    CHECK(multiplicative_prime_witnesses(2, 3, 1000).primes == gens_t{2, 3, 5});

    auto partial = multiplicative_prime_witnesses(4, 5, 2);
    CHECK_FALSE(partial.complete);
    CHECK(partial.primes == gens_t{7});

    CHECK_THROWS_AS(multiplicative_prime_witnesses(1, 3, 10), usage_error);

    for (std::uint64_t a = 2; a <= 25; ++a) {
        const auto w = multiplicative_prime_witnesses(a, 5, 100000);
        const auto t = strong_closure(gens_t{a});
        REQUIRE(w.complete);
        for (auto p : w.primes) {
            CHECK(oracle::trial_division_prime(p));
            CHECK(p % (a - 1) == 1 % (a - 1));
            CHECK(t.contains(p));
        }
    }
}

TEST_CASE("is_prime")
{
    for (std::uint64_t n = 0; n < 2000; ++n) {
        REQUIRE(is_prime(n) == oracle::trial_division_prime(n));
    }
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1000001));
}
