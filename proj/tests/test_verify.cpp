#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fpsmon/errors.hpp>
#include <fpsmon/verify.hpp>

using namespace fpsmon;

namespace
{

const auto Z = RingDescriptor::integers();

TruncatedSeries ps(const char *text, const RingDescriptor &ring, exponent_t n)
{
    return parse_series(text, ring, n).series;
}

TrialConfig small_config()
{
    TrialConfig c;
    c.trials = 20;
    c.precision = 20;
    return c;
}

const PropertyResult &property(const Report &r, const std::string &name)
{
    for (const auto &p : r.properties) {
        if (p.name == name) {
            return p;
        }
    }
    FAIL("missing property " << name);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("splitmix64 reference values")
{
    // First outputs for seed 0 and seed 1234567 of the published SplitMix64.
    SplitMix64 a(0);
    CHECK(a.next() == 0xe220a8397b1dcdafULL);
    CHECK(a.next() == 0x6e789e6aa1b965f4ULL);
    SplitMix64 b(1234567);
    CHECK(b.next() == 6457827717110365317ULL);
    CHECK(b.next() == 3203168211198807973ULL);

    SplitMix64 r(9);
    for (int i = 0; i < 1000; ++i) {
        const auto v = r.between(-3, 4);
        REQUIRE(v >= -3);
        REQUIRE(v <= 4);
    }
}

TEST_CASE("newton oracle examples")
{
    CHECK(format_series(newton_inverse_oracle(ps("x + x^2", Z, 6))) ==
          "x - x^2 + 2*x^3 - 5*x^4 + 14*x^5 - 42*x^6");
    CHECK(newton_inverse_oracle(ps("x", Z, 9)) == TruncatedSeries::identity(Z, 9));

    const auto z5 = RingDescriptor::integers_mod(5);
    const auto f = ps("2*x + x^2", z5, 8);
    const auto g = newton_inverse_oracle(f);
    CHECK(g == invert(f));
    CHECK(compose(f, g) == TruncatedSeries::identity(z5, 8));

    CHECK_THROWS_AS(newton_inverse_oracle(ps("2*x", Z, 4)), not_invertible);
}

TEST_CASE("oracle agrees with invert on random series")
{
    SplitMix64 rng(77);
    const auto any = [](std::uint64_t t) { return t >= 1; };
    for (const auto &ring : {Z, RingDescriptor::integers_mod(7), RingDescriptor::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            const auto f = random_series(rng, ring, 15, any, true);
            REQUIRE(newton_inverse_oracle(f) == invert(f));
        }
    }
}

TEST_CASE("random generators respect their contracts")
{
    SplitMix64 rng(5);
    const auto t = strong_closure(std::vector<std::uint64_t>{4, 6});
    for (const auto &ring : {Z, RingDescriptor::integers_mod(6), RingDescriptor::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            const auto f = random_series(rng, ring, 30, t.predicate(), true);
            REQUIRE(is_supported_on(f, t).holds);
            REQUIRE(is_invertible(f));
            const auto g = random_series(rng, ring, 30, t.predicate(), false);
            REQUIRE(is_supported_on(g, t).holds);
        }
    }
    const auto u = support_from_T(t, 3, 10);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_tuple(rng, Z, u);
        REQUIRE(f.size() == 3);
        REQUIRE(is_supported_on_nd(f, u).holds);
        for (const auto &c : f.components()) {
            REQUIRE(c.terms().size() <= 4);
        }
    }
}

TEST_CASE("anti-homomorphism on a fixed pair")
{
    const auto f = ps("x + x^3", Z, 9);
    const auto g = ps("x + 3*x^3", Z, 9);
    CHECK(invert(compose(f, g)) == compose(invert(g), invert(f)));
}

TEST_CASE("escape search")
{
    SplitMix64 rng(1);
    const auto evens = [](std::uint64_t t) { return t == 1 || t % 2 == 0; };
    const auto w = find_escape(evens, 60, rng, 100);
    REQUIRE_FALSE(w.is_null());
    CHECK(w["f"] == "x^2");
    CHECK(w["g"] == "x + x^2");
    CHECK(w["exponent"] == "3");

    // Re-check the witness standalone.
    const auto f = ps(w["f"].get<std::string>().c_str(), Z, 60);
    const auto g = ps(w["g"].get<std::string>().c_str(), Z, 60);
    CHECK_FALSE(evens(std::stoull(w["exponent"].get<std::string>())));
    CHECK(compose(f, g).coeff(3) == RingElement(Z, 2L));

    const auto odd = [](std::uint64_t t) { return t % 2 == 1; };
    CHECK(find_escape(odd, 40, rng, 50).is_null());
}

TEST_CASE("suites pass at small defaults")
{
    const auto c = small_config();
    const auto t = strong_closure(c.gens);
    const std::vector<Report> reports{check_theorem_main(c), check_inverse_support(c, t), check_group_axioms(c, t),
                                      check_nd(c, t, 2), check_nd(c, t, 3)};
    for (const auto &r : reports) {
        CAPTURE(r.suite);
        CHECK(r.passed());
        for (const auto &p : r.properties) {
            CAPTURE(p.name);
            CHECK(p.as_predicted());
            CHECK(p.cases > 0);
            if (!p.observed_pass) {
                CHECK_FALSE(p.witnesses.empty());
            }
        }
    }
    const auto main = check_theorem_main(c);
    CHECK_FALSE(property(main, "one_and_evens_closed_under_composition").expect_pass);
    CHECK(property(main, "coverage_floor").observed_pass);
}

TEST_CASE("odds and the trivial monoid")
{
    auto c = small_config();
    c.gens = {3};
    const auto odds = strong_closure(c.gens);
    CHECK(check_inverse_support(c, odds).passed());
    CHECK(check_group_axioms(c, odds).passed());
    CHECK(check_nd(c, odds, 2).passed());

    c.gens = {};
    const StrongMonoid one;
    CHECK(check_inverse_support(c, one).passed());
    CHECK(check_group_axioms(c, one).passed());
}

TEST_CASE("reports are deterministic")
{
    const auto c = small_config();
    const auto t = strong_closure(c.gens);
    CHECK(check_theorem_main(c).to_json().dump() == check_theorem_main(c).to_json().dump());
    CHECK(check_inverse_support(c, t).to_json().dump() == check_inverse_support(c, t).to_json().dump());
    CHECK(check_nd(c, t, 3).to_json().dump() == check_nd(c, t, 3).to_json().dump());

    auto other = c;
    other.seed = 43;
    CHECK(check_inverse_support(c, t).to_json() != check_inverse_support(other, t).to_json());
}

TEST_CASE("config validation")
{
    TrialConfig c;
    CHECK_NOTHROW(c.validate());
    c.rings.clear();
    CHECK_THROWS_AS(c.validate(), usage_error);
    c = TrialConfig{};
    c.nvars = 5;
    CHECK_THROWS_AS(c.validate(), usage_error);
    c = TrialConfig{};
    c.precision = 0;
    CHECK_THROWS_AS(c.validate(), usage_error);
}
