#include <fpsmon/errors.hpp>
#include <fpsmon/verify.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace fpsmon
{

using json = nlohmann::ordered_json;

namespace
{

// Random non-closed exponent sets exercised by the main suite.
constexpr std::size_t random_nonclosed_sets = 50;

json series_json(const TruncatedSeries &f)
{
    return format_series(f);
}

json gens_json(const std::vector<std::uint64_t> &g)
{
    json out = json::array();
    for (auto x : g) {
        out.push_back(std::to_string(x));
    }
    return out;
}

RingElement random_coeff(SplitMix64 &rng, const RingDescriptor &ring)
{
    switch (ring.kind()) {
        case ring_kind::integers:
            return RingElement(ring, static_cast<long>(rng.between(-9, 9)));
        case ring_kind::integers_mod:
            return RingElement(ring, mpz_class(std::to_string(rng.next() % ring.modulus())));
        case ring_kind::rationals: {
            const auto num = rng.between(-9, 9);
            const auto den = rng.between(1, 9);
            return RingElement(ring, mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
        }
    }
    return RingElement::zero(ring);
}

RingElement random_unit(SplitMix64 &rng, const RingDescriptor &ring)
{
    if (ring.kind() == ring_kind::integers) {
        return RingElement(ring, rng.coin() ? 1L : -1L);
    }
    while (true) {
        auto c = random_coeff(rng, ring);
        if (inverse_unit(c)) {
            return c;
        }
    }
}

class Stopwatch
{
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - m_start).count();
    }

private:
    std::chrono::steady_clock::time_point m_start = std::chrono::steady_clock::now();
};

void fail(PropertyResult &p, json witness)
{
    p.observed_pass = false;
    // Keep reports small; the first few witnesses are enough to re-check.
    if (p.witnesses.size() < 5) {
        p.witnesses.push_back(std::move(witness));
    }
}

std::vector<std::vector<std::uint64_t>> small_generator_family()
{
    std::vector<std::vector<std::uint64_t>> out{{}};
    for (std::uint64_t a = 2; a <= 12; ++a) {
        out.push_back({a});
        for (std::uint64_t b = a + 1; b <= 12; ++b) {
            out.push_back({a, b});
            for (std::uint64_t c = b + 1; c <= 12; ++c) {
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

// Uniform subset of 1..bound containing 1, redrawn until it is not strongly
// closed and has an element in [2, s_max]. Without such an element condition
// (b) capped at s_max only sees s = 1 and holds vacuously.
std::vector<std::uint64_t> random_nonclosed_set(SplitMix64 &rng, std::uint64_t bound, std::uint64_t s_max)
{
    while (true) {
        std::vector<std::uint64_t> elems{1};
        for (std::uint64_t t = 2; t <= bound; ++t) {
            if (rng.coin()) {
                elems.push_back(t);
            }
        }
        if (s_max >= 2 && (elems.size() < 2 || elems[1] > s_max)) {
            continue;
        }
        if (!is_strongly_closed(explicit_set(elems), bound).holds) {
            return elems;
        }
    }
}

std::vector<std::uint64_t> one_and_evens(std::uint64_t bound)
{
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t t = 2; t <= bound; t += 2) {
        out.push_back(t);
    }
    return out;
}

json membership_prefix(const MembershipFn &member, std::uint64_t bound)
{
    std::vector<std::uint64_t> elems;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (member(t)) {
            elems.push_back(t);
        }
    }
    return gens_json(elems);
}

// Tuple (x1^s, x2, ..., xn) or its inner partner (x1 + x1^t, x2, ..., xn).
SeriesTuple lifted_tuple(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree, std::uint32_t s,
                         std::uint32_t t)
{
    auto comps = SeriesTuple::identity(ring, nvars, degree).components();
    Monomial u(nvars, 0);
    if (s != 0) {
        u[0] = s;
        comps[0] = MultiSeries(ring, nvars, degree);
        comps[0].set_coeff(u, RingElement::one(ring));
    } else {
        u[0] = t;
        comps[0].add_to_coeff(u, RingElement::one(ring));
    }
    return SeriesTuple(std::move(comps));
}

json tuple_escape_witness(const SeriesTuple &f, const SeriesTuple &g, const SeriesTuple &h, const Verdict &v)
{
    json w;
    w["f"] = format_tuple(f);
    w["g"] = format_tuple(g);
    w["composite"] = format_tuple(h);
    w["component"] = std::to_string(v.witness.front());
    Monomial u(v.witness.begin() + 1, v.witness.end());
    w["monomial"] = format_monomial(u);
    w["norm"] = std::to_string(norm(u));
    return w;
}

} // namespace

void TrialConfig::validate() const
{
    if (trials < 1 || bound < 1 || precision < 1 || s_max < 1 || degree < 1 || nvars < 1) {
        throw usage_error("trial counts, bounds and precisions must all be at least 1");
    }
    if (rings.empty()) {
        throw usage_error("at least one ring is required");
    }
    if (s_max > bound) {
        throw usage_error("s_max must not exceed the bound");
    }
    if (nvars < 2 || nvars > 4) {
        throw usage_error("the several-variable suite takes 2, 3 or 4 variables");
    }
}

json TrialConfig::to_json() const
{
    json out;
    out["seed"] = std::to_string(seed);
    out["trials"] = std::to_string(trials);
    out["bound"] = std::to_string(bound);
    out["precision"] = std::to_string(precision);
    json r = json::array();
    for (const auto &ring : rings) {
        r.push_back(ring.to_string());
    }
    out["rings"] = r;
    out["s_max"] = std::to_string(s_max);
    out["gens"] = gens_json(gens);
    out["nvars"] = std::to_string(nvars);
    out["degree"] = std::to_string(degree);
    out["generator"] = "splitmix64; support: each admissible exponent with probability 1/2; "
                       "coefficients: z uniform [-9,9], zmod:m uniform residues, q a/b with a in [-9,9], b in [1,9]; "
                       "a_1 forced to a unit when invertibility is required; "
                       "non-closed sets: uniform subsets of 1..bound containing 1 with an element in [2, s_max]";
    return out;
}

bool Report::passed() const noexcept
{
    return std::all_of(properties.begin(), properties.end(), [](const auto &p) { return p.as_predicted(); });
}

json Report::to_json() const
{
    json out;
    out["suite"] = suite;
    out["config"] = config;
    json props = json::array();
    for (const auto &p : properties) {
        json j;
        j["name"] = p.name;
        j["expected"] = p.expect_pass ? "pass" : "fail";
        j["observed"] = p.observed_pass ? "pass" : "fail";
        j["as_predicted"] = p.as_predicted();
        j["cases"] = std::to_string(p.cases);
        j["witnesses"] = p.witnesses;
        props.push_back(std::move(j));
    }
    out["properties"] = props;
    out["passed"] = passed();
    return out;
}

MembershipFn explicit_set(std::vector<std::uint64_t> elems)
{
    std::sort(elems.begin(), elems.end());
    return [elems = std::move(elems)](std::uint64_t t) { return std::binary_search(elems.begin(), elems.end(), t); };
}

TruncatedSeries random_series(SplitMix64 &rng, const RingDescriptor &ring, exponent_t precision,
                              const MembershipFn &member, bool invertible)
{
    TruncatedSeries f(ring, precision);
    for (exponent_t e = 1; e <= precision; ++e) {
        if (!member(e)) {
            continue;
        }
        if (e == 1 && invertible) {
            f.set_coeff(1, random_unit(rng, ring));
            continue;
        }
        if (rng.coin()) {
            f.set_coeff(e, random_coeff(rng, ring));
        }
    }
    return f;
}

SeriesTuple random_tuple(SplitMix64 &rng, const RingDescriptor &ring, const SupportSetND &u)
{
    const auto pool = u.enumerate();
    std::vector<MultiSeries> comps;
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        MultiSeries c(ring, u.nvars(), u.degree());
        const auto terms = rng.between(1, 4);
        for (std::int64_t k = 0; k < terms && !pool.empty(); ++k) {
            const auto &m = pool[rng.next() % pool.size()];
            c.add_to_coeff(m, random_coeff(rng, ring));
        }
        comps.push_back(std::move(c));
    }
    return SeriesTuple(std::move(comps));
}

TruncatedSeries newton_inverse_oracle(const TruncatedSeries &f)
{
    const auto &ring = f.ring();
    const auto n = f.precision();
    const auto a1 = f.coeff(1);
    if (!inverse_unit(a1)) {
        throw not_invertible("linear coefficient " + a1.to_string() + " is not a unit of " + ring.to_string());
    }
    // powers[k] = f^k, computed directly from f.
    std::vector<TruncatedSeries> powers;
    powers.reserve(n + 1);
    powers.emplace_back(ring, n);
    powers.push_back(f);
    for (exponent_t k = 2; k <= n; ++k) {
        powers.push_back(mul(powers.back(), f));
    }
    TruncatedSeries g(ring, n);
    for (exponent_t m = 1; m <= n; ++m) {
        // [x^m] f^m = a_1^m.
        auto lead_inv = inverse_unit(powers[m].coeff(m));
        RingElement rhs = RingElement(ring, m == 1 ? 1L : 0L);
        for (exponent_t k = 1; k < m; ++k) {
            rhs -= g.coeff(k) * powers[k].coeff(m);
        }
        g.set_coeff(m, rhs * *lead_inv);
    }
    return g;
}

json find_escape(const MembershipFn &member, std::uint64_t bound, SplitMix64 &rng, std::uint64_t random_probes)
{
    const auto ring = RingDescriptor::integers();
    const auto n = static_cast<exponent_t>(bound);
    std::vector<exponent_t> elems;
    for (exponent_t t = 2; t <= n; ++t) {
        if (member(t)) {
            elems.push_back(t);
        }
    }
    std::uint64_t probes = 0;
    const auto one = RingElement::one(ring);
    for (auto s : elems) {
        for (auto t : elems) {
            if (s + t - 1 > n) {
                break;
            }
            ++probes;
            auto f = TruncatedSeries::monomial(one, s, n);
            auto g = add(TruncatedSeries::identity(ring, n), TruncatedSeries::monomial(one, t, n));
            auto h = compose(f, g);
            auto v = is_supported_on(h, member);
            if (!v.holds) {
                json w;
                w["f"] = series_json(f);
                w["g"] = series_json(g);
                w["composite"] = series_json(h);
                w["exponent"] = std::to_string(v.witness.front());
                w["probes"] = std::to_string(probes);
                return w;
            }
        }
    }
    for (std::uint64_t i = 0; i < random_probes; ++i) {
        ++probes;
        auto f = random_series(rng, ring, n, member, false);
        auto g = random_series(rng, ring, n, member, false);
        auto h = compose(f, g);
        auto v = is_supported_on(h, member);
        if (!v.holds) {
            json w;
            w["f"] = series_json(f);
            w["g"] = series_json(g);
            w["composite"] = series_json(h);
            w["exponent"] = std::to_string(v.witness.front());
            w["probes"] = std::to_string(probes);
            return w;
        }
    }
    return nullptr;
}

Report check_theorem_main(const TrialConfig &config)
{
    config.validate();
    Stopwatch clock;
    Report report{"main", config.to_json(), {}, 0.0};
    SplitMix64 rng(config.seed);
    const auto bound = config.bound;

    PropertyResult equiv{"condition_b_iff_c"};
    PropertyResult formula{"closure_formula_matches_fixed_point"};
    PropertyResult family_closure{"family_compositions_stay_supported"};
    std::set<std::vector<bool>> distinct;

    for (const auto &x : small_generator_family()) {
        const auto t = strong_closure(x);
        const auto member = t.predicate();
        const auto c = is_strongly_closed(member, bound);
        const auto b = satisfies_partition_condition(member, bound, config.s_max);
        ++equiv.cases;
        if (c.holds != b.holds) {
            fail(equiv, json{{"gens", gens_json(x)}, {"c", c.detail}, {"b", b.detail}});
        }

        std::vector<bool> prefix(bound + 1, false);
        const auto fixed = fixed_point_closure(x, bound);
        ++formula.cases;
        for (std::uint64_t k = 1; k <= bound; ++k) {
            prefix[k] = t.contains(k);
            if (prefix[k] != fixed[k]) {
                fail(formula, json{{"gens", gens_json(x)}, {"n", std::to_string(k)}});
                break;
            }
        }
        distinct.insert(prefix);

        const auto n = std::min<exponent_t>(config.precision, 20);
        const auto ring = RingDescriptor::integers();
        auto f = random_series(rng, ring, n, member, false);
        auto g = random_series(rng, ring, n, member, false);
        auto h = compose(f, g);
        ++family_closure.cases;
        if (auto v = is_supported_on(h, member); !v.holds) {
            fail(family_closure, json{{"gens", gens_json(x)},
                                      {"f", series_json(f)},
                                      {"g", series_json(g)},
                                      {"exponent", std::to_string(v.witness.front())}});
        }
    }

    PropertyResult escapes{"non_closed_sets_admit_escape"};
    // Below 3 every set containing 1 is closed within the bound.
    const std::size_t nonclosed_count = bound >= 3 ? random_nonclosed_sets : 0;
    for (std::size_t i = 0; i < nonclosed_count; ++i) {
        const auto elems = random_nonclosed_set(rng, bound, config.s_max);
        const auto member = explicit_set(elems);
        const auto c = is_strongly_closed(member, bound);
        const auto b = satisfies_partition_condition(member, bound, config.s_max);
        ++equiv.cases;
        if (c.holds != b.holds) {
            fail(equiv, json{{"set", gens_json(elems)}, {"c", c.detail}, {"b", b.detail}});
        }
        ++escapes.cases;
        auto w = find_escape(member, bound, rng, 100);
        if (w.is_null()) {
            fail(escapes, json{{"set", gens_json(elems)}, {"detail", "no escaping composition found"}});
        }
    }

    PropertyResult focus{"compositions_stay_supported"};
    const auto t = strong_closure(config.gens);
    const auto member = t.predicate();
    for (const auto &ring : config.rings) {
        for (std::uint64_t i = 0; i < config.trials; ++i) {
            auto f = random_series(rng, ring, config.precision, member, false);
            auto g = random_series(rng, ring, config.precision, member, false);
            auto h = compose(f, g);
            ++focus.cases;
            if (auto v = is_supported_on(h, member); !v.holds) {
                fail(focus, json{{"ring", ring.to_string()},
                                 {"f", series_json(f)},
                                 {"g", series_json(g)},
                                 {"exponent", std::to_string(v.witness.front())}});
            }
        }
    }

    // Probe: {1} ∪ evens is multiplicatively closed but not strongly closed,
    // so some composition must leave it.
    PropertyResult probe{"one_and_evens_closed_under_composition", false};
    {
        const auto elems = one_and_evens(bound);
        const auto pm = explicit_set(elems);
        probe.cases = 1;
        auto w = find_escape(pm, bound, rng, 1000);
        if (!w.is_null()) {
            fail(probe, w);
        }
    }

    json coverage;
    report.properties = {equiv, formula, family_closure, escapes, focus, probe};
    PropertyResult floor{"coverage_floor"};
    floor.cases = distinct.size();
    if (distinct.size() < 50 || escapes.cases < 10) {
        fail(floor, json{{"distinct_T", std::to_string(distinct.size())},
                         {"non_closed", std::to_string(escapes.cases)}});
    }
    report.properties.push_back(floor);
    report.duration_ms = clock.elapsed_ms();
    return report;
}

Report check_inverse_support(const TrialConfig &config, const StrongMonoid &t)
{
    config.validate();
    Stopwatch clock;
    Report report{"inverse", config.to_json(), {}, 0.0};
    report.config["T"] = membership_prefix(t.predicate(), std::min<std::uint64_t>(config.precision, 40));
    SplitMix64 rng(config.seed);
    const auto member = t.predicate();
    const auto n = config.precision;

    PropertyResult two_sided{"two_sided_inverse"};
    PropertyResult supported{"inverse_supported_on_T"};
    PropertyResult oracle{"inverse_matches_oracle"};
    PropertyResult involution{"inverse_of_inverse"};

    for (const auto &ring : config.rings) {
        const auto x = TruncatedSeries::identity(ring, n);
        for (std::uint64_t i = 0; i < config.trials; ++i) {
            auto f = random_series(rng, ring, n, member, true);
            auto g = invert(f);
            const json ctx{{"ring", ring.to_string()}, {"f", series_json(f)}, {"inverse", series_json(g)}};

            ++two_sided.cases;
            if (!(compose(f, g) == x) || !(compose(g, f) == x)) {
                fail(two_sided, ctx);
            }
            ++supported.cases;
            if (auto v = is_supported_on(g, member); !v.holds) {
                auto w = ctx;
                w["exponent"] = std::to_string(v.witness.front());
                fail(supported, w);
            }
            ++oracle.cases;
            if (auto h = newton_inverse_oracle(f); !(h == g)) {
                auto w = ctx;
                w["oracle"] = series_json(h);
                fail(oracle, w);
            }
            ++involution.cases;
            if (!(invert(g) == f)) {
                fail(involution, ctx);
            }
        }
    }
    report.properties = {two_sided, supported, oracle, involution};
    report.duration_ms = clock.elapsed_ms();
    return report;
}

Report check_group_axioms(const TrialConfig &config, const StrongMonoid &t)
{
    config.validate();
    Stopwatch clock;
    Report report{"group", config.to_json(), {}, 0.0};
    report.config["T"] = membership_prefix(t.predicate(), std::min<std::uint64_t>(config.precision, 40));
    SplitMix64 rng(config.seed);
    const auto member = t.predicate();
    const auto n = config.precision;

    PropertyResult closed{"product_invertible_and_supported"};
    PropertyResult anti{"inverse_reverses_products"};
    PropertyResult identity{"identity_is_neutral"};

    for (const auto &ring : config.rings) {
        const auto x = TruncatedSeries::identity(ring, n);
        for (std::uint64_t i = 0; i < config.trials; ++i) {
            auto f = random_series(rng, ring, n, member, true);
            auto g = random_series(rng, ring, n, member, true);
            auto h = compose(f, g);
            const json ctx{{"ring", ring.to_string()}, {"f", series_json(f)}, {"g", series_json(g)}};
            ++closed.cases;
            if (!is_invertible(h) || !is_supported_on(h, member).holds) {
                fail(closed, ctx);
                continue;
            }
            ++anti.cases;
            if (!(invert(h) == compose(invert(g), invert(f)))) {
                fail(anti, ctx);
            }
            ++identity.cases;
            if (!(compose(f, x) == f) || !(compose(x, f) == f)) {
                fail(identity, ctx);
            }
        }
    }
    report.properties = {closed, anti, identity};
    report.duration_ms = clock.elapsed_ms();
    return report;
}

Report check_nd(const TrialConfig &config, const StrongMonoid &t, std::size_t nvars)
{
    config.validate();
    if (nvars < 2 || nvars > 4) {
        throw usage_error("the several-variable suite supports n in {2, 3, 4}");
    }
    Stopwatch clock;
    Report report{"nd", config.to_json(), {}, 0.0};
    report.config["nvars"] = std::to_string(nvars);
    SplitMix64 rng(config.seed);
    const auto degree = config.degree;
    const auto support = support_from_T(t, nvars, degree);

    PropertyResult saturated{"pullback_is_norm_saturated"};
    saturated.cases = 1;
    if (auto v = is_norm_saturated(support); !v.holds) {
        fail(saturated, json{{"detail", v.detail}});
    }

    PropertyResult closure{"tuple_compositions_stay_supported"};
    PropertyResult identity{"identity_tuple_is_neutral"};
    for (const auto &ring : config.rings) {
        const auto id = SeriesTuple::identity(ring, nvars, degree);
        for (std::uint64_t i = 0; i < config.trials; ++i) {
            auto f = random_tuple(rng, ring, support);
            auto g = random_tuple(rng, ring, support);
            auto h = compose_tuple(f, g);
            ++closure.cases;
            if (auto v = is_supported_on_nd(h, support); !v.holds) {
                fail(closure, tuple_escape_witness(f, g, h, v));
            }
            ++identity.cases;
            if (!(compose_tuple(f, id) == f) || !(compose_tuple(id, f) == f)) {
                fail(identity, json{{"ring", ring.to_string()}, {"f", format_tuple(f)}});
            }
        }
    }

    // Probe: U pulled back from {1} ∪ evens must leak under composition.
    PropertyResult escape{"one_and_evens_pullback_closed", false};
    {
        const auto ring = RingDescriptor::integers();
        const auto bad = SupportSetND::from_norms(explicit_set(one_and_evens(degree)), nvars, degree);
        std::uint64_t probes = 0;
        json witness = nullptr;
        for (std::uint32_t s = 2; s <= degree && witness.is_null(); s += 2) {
            for (std::uint32_t r = 2; s + r - 1 <= degree; r += 2) {
                ++probes;
                auto f = lifted_tuple(ring, nvars, degree, s, 0);
                auto g = lifted_tuple(ring, nvars, degree, 0, r);
                auto h = compose_tuple(f, g);
                if (auto v = is_supported_on_nd(h, bad); !v.holds) {
                    witness = tuple_escape_witness(f, g, h, v);
                    break;
                }
            }
        }
        while (witness.is_null() && probes < 1000) {
            ++probes;
            auto f = random_tuple(rng, ring, bad);
            auto g = random_tuple(rng, ring, bad);
            auto h = compose_tuple(f, g);
            if (auto v = is_supported_on_nd(h, bad); !v.holds) {
                witness = tuple_escape_witness(f, g, h, v);
            }
        }
        escape.cases = probes;
        if (!witness.is_null()) {
            witness["probes"] = std::to_string(probes);
            fail(escape, witness);
        }
    }

    // Probe: an explicit U that is not norm-saturated leaks under x^u o (g, ..., g)
    // with g = x1 + ... + xn.
    PropertyResult unsaturated{"unsaturated_U_closed", false};
    {
        const auto ring = RingDescriptor::integers();
        std::vector<Monomial> members;
        for (std::size_t i = 0; i < nvars; ++i) {
            Monomial e(nvars, 0);
            e[i] = 1;
            members.push_back(e);
        }
        Monomial two(nvars, 0);
        two[0] = 2;
        members.push_back(two);
        const auto explicit_u = SupportSetND::from_explicit(members, nvars, degree);
        unsaturated.cases = 1;
        const auto sat = is_norm_saturated(explicit_u);
        if (!sat.holds) {
            Monomial u(sat.witness.begin(), sat.witness.begin() + nvars);
            MultiSeries xu(ring, nvars, degree);
            xu.set_coeff(u, RingElement::one(ring));
            auto comps = SeriesTuple::identity(ring, nvars, degree).components();
            comps[0] = xu;
            SeriesTuple f(comps);
            MultiSeries sum(ring, nvars, degree);
            for (std::size_t i = 1; i <= nvars; ++i) {
                sum = add_nd(sum, MultiSeries::variable(ring, nvars, degree, i));
            }
            SeriesTuple g(std::vector<MultiSeries>(nvars, sum));
            auto h = compose_tuple(f, g);
            if (auto v = is_supported_on_nd(h, explicit_u); !v.holds) {
                auto w = tuple_escape_witness(f, g, h, v);
                w["saturation_witness"] = sat.detail;
                fail(unsaturated, w);
            }
        }
    }

    report.properties = {saturated, closure, identity, escape, unsaturated};
    report.duration_ms = clock.elapsed_ms();
    return report;
}

} // namespace fpsmon
