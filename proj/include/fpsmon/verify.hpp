#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include <fpsmon/expmonoid.hpp>
#include <fpsmon/multiseries.hpp>
#include <fpsmon/random.hpp>
#include <fpsmon/ring.hpp>
#include <fpsmon/series.hpp>

namespace fpsmon
{

struct TrialConfig {
    std::uint64_t seed = 42;
    std::uint64_t trials = 100;
    std::uint64_t bound = 60;
    exponent_t precision = 30;
    std::vector<RingDescriptor> rings{RingDescriptor::integers(), RingDescriptor::integers_mod(7)};
    std::uint64_t s_max = 6;
    // Generators of the strongly closed T the series trials run on.
    std::vector<std::uint64_t> gens{4, 6};
    // Variable count and degree bound for the several-variable suite.
    std::size_t nvars = 2;
    std::uint32_t degree = 10;

    void validate() const;
    nlohmann::ordered_json to_json() const;
};

struct PropertyResult {
    explicit PropertyResult(std::string n, bool expect = true) : name(std::move(n)), expect_pass(expect) {}

    std::string name;
    // Whether the property is predicted to hold (probes are predicted to fail).
    bool expect_pass = true;
    bool observed_pass = true;
    std::uint64_t cases = 0;
    std::vector<nlohmann::ordered_json> witnesses;

    bool as_predicted() const noexcept
    {
        return expect_pass == observed_pass;
    }
};

struct Report {
    std::string suite;
    nlohmann::ordered_json config;
    std::vector<PropertyResult> properties;
    // Informational; deliberately absent from the JSON so reports stay reproducible.
    double duration_ms = 0.0;

    bool passed() const noexcept;
    nlohmann::ordered_json to_json() const;
};

// Random series over `ring` supported on member ∩ [1, N]: each admissible
// exponent is kept with probability 1/2; coefficients are uniform on [-9, 9]
// (Z), on all residues (Z/m), or a/b with a in [-9, 9], b in [1, 9] (Q).
// With `invertible`, 1 is always in the support and a_1 is drawn from the units.
TruncatedSeries random_series(SplitMix64 &rng, const RingDescriptor &ring, exponent_t precision,
                              const MembershipFn &member, bool invertible);

// Random tuple whose components each carry 1..4 monomials drawn uniformly from U.
SeriesTuple random_tuple(SplitMix64 &rng, const RingDescriptor &ring, const SupportSetND &u);

// Compositional inverse by a second route: expand g(f(x)) = x, i.e.
// sum_k b_k [x^n] f^k = [n == 1], and solve for b_n with divisor a_1^n.
TruncatedSeries newton_inverse_oracle(const TruncatedSeries &f);

// Searches for an escaping composition x^s o (x + x^t) with s, t in T,
// sweeping (s, t) in lexicographic order. The witness JSON holds f, g, the
// composite and the offending exponent; null when none is found.
nlohmann::ordered_json find_escape(const MembershipFn &member, std::uint64_t bound, SplitMix64 &rng,
                                   std::uint64_t random_probes);

Report check_theorem_main(const TrialConfig &config);
Report check_inverse_support(const TrialConfig &config, const StrongMonoid &t);
Report check_group_axioms(const TrialConfig &config, const StrongMonoid &t);
Report check_nd(const TrialConfig &config, const StrongMonoid &t, std::size_t nvars);

// Membership in an explicit finite list (everything else is outside).
MembershipFn explicit_set(std::vector<std::uint64_t> elems);

} // namespace fpsmon
