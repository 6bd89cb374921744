#include <fpsmon/errors.hpp>
#include <fpsmon/expmonoid.hpp>

#include <algorithm>
#include <sstream>

namespace fpsmon
{

std::vector<std::uint64_t> StrongMonoid::minimal_generators() const
{
    auto gens = m_shadow.minimal_generators();
    for (auto &g : gens) {
        g += 1;
    }
    return gens;
}

std::vector<std::uint64_t> StrongMonoid::members(std::uint64_t bound) const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (contains(t)) {
            out.push_back(t);
        }
    }
    return out;
}

StrongMonoid strong_closure(std::span<const std::uint64_t> gens)
{
    std::vector<std::uint64_t> shifted;
    for (auto x : gens) {
        if (x == 0) {
            throw usage_error("strong closure generators must be positive integers");
        }
        if (x > 1) {
            shifted.push_back(x - 1);
        }
    }
    std::vector<std::uint64_t> origin(gens.begin(), gens.end());
    std::sort(origin.begin(), origin.end());
    origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
    return StrongMonoid(AdditiveMonoid::from_generators(shifted), std::move(origin));
}

AdditiveMonoid to_additive(const StrongMonoid &t)
{
    return t.shadow();
}

StrongMonoid from_additive(const AdditiveMonoid &s)
{
    return StrongMonoid(s);
}

Verdict is_strongly_closed(const MembershipFn &member, std::uint64_t bound)
{
    if (bound < 1) {
        throw usage_error("bound must be at least 1");
    }
    if (!member(1)) {
        return Verdict::fail({1}, "1 not in T");
    }
    std::vector<std::uint64_t> elems;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (member(t)) {
            elems.push_back(t);
        }
    }
    for (auto s : elems) {
        for (auto t : elems) {
            const auto r = s + t - 1;
            if (r > bound) {
                break;
            }
            if (!member(r)) {
                std::ostringstream os;
                os << "s=" << s << " t=" << t << " s+t-1=" << r << " not in T";
                return Verdict::fail({s, t}, os.str());
            }
        }
    }
    return Verdict::pass();
}

namespace
{

// Condition (b) for one fixed composition. reach[j] marks every value of
// sum_{i >= j} parts[i] * t_i attainable with t_i in T and total <= bound, which
// turns the search for the lexicographically least bad tuple into a guided
// depth-first walk instead of a blind sweep over T^k.
class CompositionChecker
{
public:
    CompositionChecker(const std::vector<std::uint64_t> &parts, const std::vector<std::uint64_t> &elems,
                       const std::vector<bool> &in_t, std::uint64_t bound)
        : m_parts(parts), m_elems(elems), m_in_t(in_t), m_bound(bound)
    {
        const auto k = parts.size();
        m_reach.assign(k + 1, std::vector<bool>(bound + 1, false));
        m_reach[k][0] = true;
        for (std::size_t j = k; j-- > 0;) {
            for (std::uint64_t r = 0; r <= bound; ++r) {
                if (!m_reach[j + 1][r]) {
                    continue;
                }
                for (auto t : elems) {
                    const auto v = r + parts[j] * t;
                    if (v > bound) {
                        break;
                    }
                    m_reach[j][v] = true;
                }
            }
        }
    }

    // Lexicographically least (t_1..t_k) whose weighted sum is not in T.
    std::optional<std::vector<std::uint64_t>> find_violation()
    {
        std::vector<std::uint64_t> chosen;
        if (search(0, 0, chosen)) {
            return chosen;
        }
        return std::nullopt;
    }

private:
    // True when some completion of a prefix with weighted sum `acc`, using
    // parts j.., lands outside T.
    bool bad_completion_exists(std::size_t j, std::uint64_t acc) const
    {
        for (std::uint64_t r = 0; acc + r <= m_bound; ++r) {
            if (m_reach[j][r] && !m_in_t[acc + r]) {
                return true;
            }
        }
        return false;
    }

    bool search(std::size_t j, std::uint64_t acc, std::vector<std::uint64_t> &chosen) const
    {
        if (j == m_parts.size()) {
            return !m_in_t[acc];
        }
        for (auto t : m_elems) {
            const auto v = acc + m_parts[j] * t;
            if (v > m_bound) {
                break;
            }
            if (!bad_completion_exists(j + 1, v)) {
                continue;
            }
            chosen.push_back(t);
            if (search(j + 1, v, chosen)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }

    const std::vector<std::uint64_t> &m_parts;
    const std::vector<std::uint64_t> &m_elems;
    const std::vector<bool> &m_in_t;
    std::uint64_t m_bound;
    std::vector<std::vector<bool>> m_reach;
};

// Visits compositions of n (positive parts) in lexicographic order; stops
// when the visitor returns true.
template <typename Visitor>
bool for_each_composition(std::uint64_t remaining, std::vector<std::uint64_t> &parts, Visitor &&visit)
{
    if (remaining == 0) {
        return visit(parts);
    }
    for (std::uint64_t p = 1; p <= remaining; ++p) {
        parts.push_back(p);
        if (for_each_composition(remaining - p, parts, visit)) {
            return true;
        }
        parts.pop_back();
    }
    return false;
}

} // namespace

Verdict satisfies_partition_condition(const MembershipFn &member, std::uint64_t bound, std::uint64_t s_max)
{
    if (bound < 1) {
        throw usage_error("bound must be at least 1");
    }
    if (s_max > bound) {
        throw usage_error("s_max must not exceed the bound");
    }
    if (!member(1)) {
        return Verdict::fail({1}, "1 not in T");
    }
    std::vector<bool> in_t(bound + 1, false);
    std::vector<std::uint64_t> elems;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (member(t)) {
            in_t[t] = true;
            elems.push_back(t);
        }
    }

    Verdict verdict;
    for (auto s : elems) {
        if (s > s_max) {
            break;
        }
        std::vector<std::uint64_t> parts;
        const bool found = for_each_composition(s, parts, [&](const std::vector<std::uint64_t> &comp) {
            CompositionChecker checker(comp, elems, in_t, bound);
            auto ts = checker.find_violation();
            if (!ts) {
                return false;
            }
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                sum += comp[i] * (*ts)[i];
            }
            std::vector<std::uint64_t> w{s, comp.size()};
            w.insert(w.end(), comp.begin(), comp.end());
            w.insert(w.end(), ts->begin(), ts->end());
            w.push_back(sum);
            std::ostringstream os;
            os << "s=" << s << " parts=(";
            for (std::size_t i = 0; i < comp.size(); ++i) {
                os << (i ? "," : "") << comp[i];
            }
            os << ") t=(";
            for (std::size_t i = 0; i < ts->size(); ++i) {
                os << (i ? "," : "") << (*ts)[i];
            }
            os << ") sum=" << sum << " not in T";
            verdict = Verdict::fail(std::move(w), os.str());
            return true;
        });
        if (found) {
            return verdict;
        }
    }
    return Verdict::pass();
}

Verdict is_mult_closed(const MembershipFn &member, std::uint64_t bound)
{
    if (!member(1)) {
        return Verdict::fail({1}, "1 not in T");
    }
    std::vector<std::uint64_t> elems;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (member(t)) {
            elems.push_back(t);
        }
    }
    for (auto s : elems) {
        for (auto t : elems) {
            if (s * t > bound) {
                break;
            }
            if (!member(s * t)) {
                std::ostringstream os;
                os << "s=" << s << " t=" << t << " st=" << s * t << " not in T";
                return Verdict::fail({s, t, s * t}, os.str());
            }
        }
    }
    return Verdict::pass();
}

std::vector<bool> fixed_point_closure(std::span<const std::uint64_t> gens, std::uint64_t bound)
{
    std::vector<bool> in(bound + 1, false);
    if (bound >= 1) {
        in[1] = true;
    }
    for (auto x : gens) {
        if (x >= 1 && x <= bound) {
            in[x] = true;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t s = 1; s <= bound; ++s) {
            if (!in[s]) {
                continue;
            }
            for (std::uint64_t t = 1; s + t - 1 <= bound; ++t) {
                if (in[t] && !in[s + t - 1]) {
                    in[s + t - 1] = true;
                    changed = true;
                }
            }
        }
    }
    return in;
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeWitnesses multiplicative_prime_witnesses(std::uint64_t a, std::size_t count, std::uint64_t k_max)
{
    if (a < 2) {
        throw usage_error("prime witness base must be at least 2");
    }
    PrimeWitnesses out;
    out.base = a;
    for (std::uint64_t k = 0; k <= k_max && out.primes.size() < count; ++k) {
        const auto p = a + k * (a - 1);
        if (is_prime(p)) {
            out.primes.push_back(p);
            out.steps.push_back(k);
        }
    }
    out.complete = out.primes.size() >= count;
    return out;
}

} // namespace fpsmon
