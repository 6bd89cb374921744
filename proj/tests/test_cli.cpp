#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <fpsmon/cli.hpp>

using namespace fpsmon;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("closure")
{
    auto r = run({"closure", "--gens", "3", "--bound", "20"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "1 3 5 7 9 11 13 15 17 19\n");

    auto j = run({"closure", "--gens", "4,6", "--bound", "12", "--json"});
    CHECK(j.code == exit_ok);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["members"] == nlohmann::json{"1", "4", "6", "7", "9", "10", "11", "12"});
}

TEST_CASE("check")
{
    auto r = run({"check", "--set", "1,2,4,6,8,10", "--bound", "10"});
    CHECK(r.code == exit_verdict_fails);
    CHECK(r.out.find("s=2 t=2 s+t-1=3 not in T") != std::string::npos);

    auto ok = run({"check", "--gens", "3", "--bound", "30"});
    CHECK(ok.code == exit_ok);

    CHECK(run({"check", "--gens", "3", "--set", "1,3", "--bound", "10"}).code == exit_usage);
    CHECK(run({"check", "--gens", "3"}).code == exit_usage);
}

TEST_CASE("translate, mingens, member")
{
    auto t = run({"translate", "--gens", "4,6", "--direction", "t2s", "--bound", "10"});
    CHECK(t.code == exit_ok);
    CHECK(t.out.find("generators: 3 5") != std::string::npos);

    CHECK(run({"mingens", "--gens", "3,5,8"}).out == "3 5\n");
    auto m = run({"mingens", "--gens", "3,5,8", "--json"});
    CHECK(m.code == exit_ok);
    const auto doc = nlohmann::json::parse(m.out);
    CHECK(doc["generators"] == nlohmann::json{"3", "5"});
    CHECK(doc["conductor"] == "8");
    CHECK(doc["gaps"] == nlohmann::json{"1", "2", "4", "7"});

    CHECK(run({"member", "--gens", "3,5", "--n", "8"}).out == "true\n");
    auto no = run({"member", "--gens", "3,5", "--n", "7"});
    CHECK(no.code == exit_verdict_fails);
    CHECK(no.out == "false\n");
}

TEST_CASE("primes")
{
    auto r = run({"primes", "--a", "4", "--count", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "7 13 19\n");
    auto partial = run({"primes", "--a", "4", "--count", "5", "--kmax", "2"});
    CHECK(partial.code == exit_ok);
    CHECK_FALSE(partial.err.empty());
    CHECK(run({"primes", "--a", "1"}).code == exit_usage);
}

TEST_CASE("compose and invert")
{
    auto r = run({"compose", "--f", "x", "--g", "x", "--ring", "z", "--prec", "5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "x\n");
    CHECK(run({"compose", "--f", "x^2", "--g", "x + x^2"}).out == "x^2 + 2*x^3 + x^4\n");

    auto j = run({"compose", "--f", "x^2", "--g", "x + x^2", "--prec", "3", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["ring"] == "z");
    CHECK(doc["precision"] == 3);
    CHECK(doc["terms"] == nlohmann::json::parse(R"([[2, "1"], [3, "2"]])"));

    auto inv = run({"invert", "--f", "x + x^2", "--prec", "6"});
    CHECK(inv.code == exit_ok);
    CHECK(inv.out == "x - x^2 + 2*x^3 - 5*x^4 + 14*x^5 - 42*x^6\n");

    auto sup = run({"invert", "--f", "x + x^3", "--prec", "7", "--check-support", "3"});
    CHECK(sup.code == exit_ok);
    CHECK(sup.out.find("x - x^3 + 3*x^5 - 12*x^7") == 0);

    CHECK(run({"invert", "--f", "2*x"}).code == exit_verdict_fails);
    CHECK(run({"compose", "--f", "1 + x", "--g", "x"}).code == exit_usage);
    CHECK(run({"compose", "--f", "x", "--g", "x", "--ring", "zmod:1"}).code == exit_usage);
}

TEST_CASE("multi")
{
    auto r = run({"multi", "compose", "--n", "2", "--f", "x1^2 | x2", "--g", "x1 + x2^2 | x2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "x1^2 + 2*x1*x2^2 + x2^4 | x2\n");

    auto c = run({"multi", "check", "--gens", "3", "--n", "2", "--degree", "8", "--trials", "10", "--seed", "1"});
    CHECK(c.code == exit_ok);
    CHECK(run({"multi", "check", "--gens", "3", "--n", "2"}).code == exit_usage);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--suite", "inverse", "--seed", "42", "--trials", "10", "--prec", "15", "--json", "-"});
    CHECK(r.code == exit_ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["reports"][0]["suite"] == "inverse");

    auto again = run({"verify", "--suite", "inverse", "--seed", "42", "--trials", "10", "--prec", "15", "--json", "-"});
    CHECK(again.out == r.out);

    CHECK(run({"verify", "--suite", "main"}).code == exit_usage);
    CHECK(run({"verify", "--suite", "bogus", "--seed", "1"}).code == exit_usage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"closure", "--gens", "3", "--bogus"}).code == exit_usage);
    CHECK(run({"closure", "--gens", "0,3"}).code == exit_usage);
    CHECK(run({"closure", "--gens", "abc"}).code == exit_usage);
    auto e = run({"closure", "--gens", "3", "--bound", "-4"});
    CHECK(e.code == exit_usage);
    CHECK(e.err.find("--bound") != std::string::npos);
    CHECK(run({"--help"}).code == exit_ok);
}
