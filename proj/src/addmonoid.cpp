#include <fpsmon/addmonoid.hpp>
#include <fpsmon/errors.hpp>

#include <algorithm>
#include <numeric>

namespace fpsmon
{

AdditiveMonoid AdditiveMonoid::from_generators(std::span<const std::uint64_t> gens)
{
    AdditiveMonoid s;
    for (auto g : gens) {
        if (g == 0) {
            throw usage_error("additive generators must be positive integers");
        }
    }
    s.m_generators.assign(gens.begin(), gens.end());
    std::sort(s.m_generators.begin(), s.m_generators.end());
    s.m_generators.erase(std::unique(s.m_generators.begin(), s.m_generators.end()), s.m_generators.end());
    if (s.m_generators.empty()) {
        return s;
    }

    for (auto g : s.m_generators) {
        s.m_gcd = std::gcd(s.m_gcd, g);
    }
    const auto d = s.m_gcd;
    const auto needed_run = s.m_generators.front() / d;

    // Coin-problem DP, stopped once min(Y)/d consecutive multiples of d are
    // members: adding min(Y) then reaches every later multiple.
    std::vector<bool> dp;
    std::uint64_t run = 0;
    bool have_gap = false;
    std::uint64_t last_gap = 0;
    for (std::uint64_t n = 0;; ++n) {
        bool member = (n == 0);
        for (auto g : s.m_generators) {
            if (g > n) {
                break;
            }
            if (dp[n - g]) {
                member = true;
                break;
            }
        }
        dp.push_back(member);
        if (n % d != 0) {
            continue;
        }
        if (member) {
            if (++run == needed_run) {
                break;
            }
        } else {
            run = 0;
            have_gap = true;
            last_gap = n;
        }
    }

    s.m_conductor = have_gap ? last_gap + 1 : 0;
    dp.resize(s.m_conductor + 1);
    s.m_table = std::move(dp);
    return s;
}

bool AdditiveMonoid::contains(std::uint64_t n) const noexcept
{
    if (n < m_table.size()) {
        return m_table[n];
    }
    return m_gcd != 0 && n % m_gcd == 0;
}

std::vector<std::uint64_t> AdditiveMonoid::gaps() const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n < m_conductor; ++n) {
        if (!contains(n)) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::uint64_t> AdditiveMonoid::minimal_generators() const
{
    std::vector<std::uint64_t> out;
    if (m_generators.empty()) {
        return out;
    }
    // Every member beyond conductor + min(Y) is reducible.
    const auto bound = m_conductor + m_generators.front();
    std::vector<std::uint64_t> nonzero;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (!contains(n)) {
            continue;
        }
        bool reducible = false;
        for (auto a : nonzero) {
            if (2 * a > n) {
                break;
            }
            if (contains(n - a)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            out.push_back(n);
        }
        nonzero.push_back(n);
    }
    return out;
}

std::vector<std::uint64_t> AdditiveMonoid::members(std::uint64_t lo, std::uint64_t hi) const
{
    std::vector<std::uint64_t> out;
    for (auto n = lo; n <= hi; ++n) {
        if (contains(n)) {
            out.push_back(n);
        }
        if (n == hi) {
            break;
        }
    }
    return out;
}

} // namespace fpsmon
