#include <fpsmon/addmonoid.hpp>
#include <fpsmon/cli.hpp>
#include <fpsmon/errors.hpp>
#include <fpsmon/expmonoid.hpp>
#include <fpsmon/multiseries.hpp>
#include <fpsmon/series.hpp>
#include <fpsmon/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fpsmon
{

using json = nlohmann::ordered_json;

namespace
{

constexpr const char *series_grammar = "series grammar: term (('+'|'-') term)*, term = [coeff ['*']] x['^'exp]; "
                                       "coefficients -?[0-9]+ or a/b; tuples separate components with '|' "
                                       "and write monomials as x1^2*x2";

std::uint64_t parse_natural(const std::string &text, const std::string &flag)
{
    if (text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos) {
        throw usage_error("flag " + flag + ": expected a non-negative integer, got '" + text + "'");
    }
    return std::stoull(text);
}

std::vector<std::uint64_t> parse_list(const std::string &text, const std::string &flag)
{
    std::vector<std::uint64_t> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_natural(item, flag));
    }
    if (text.back() == ',') {
        throw usage_error("flag " + flag + ": trailing comma in list '" + text + "'");
    }
    return out;
}

std::vector<std::uint64_t> positive_list(const std::string &text, const std::string &flag)
{
    auto out = parse_list(text, flag);
    for (auto x : out) {
        if (x == 0) {
            throw usage_error("flag " + flag + ": entries must be positive integers");
        }
    }
    return out;
}

json num(std::uint64_t v)
{
    return std::to_string(v);
}

json num_list(const std::vector<std::uint64_t> &v)
{
    json out = json::array();
    for (auto x : v) {
        out.push_back(std::to_string(x));
    }
    return out;
}

std::string join(const std::vector<std::uint64_t> &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? " " : "") + std::to_string(v[i]);
    }
    return out;
}

json additive_json(const AdditiveMonoid &s, const std::vector<std::uint64_t> &generators)
{
    json out;
    out["generators"] = num_list(generators);
    out["gcd"] = num(s.gcd());
    out["conductor"] = num(s.conductor());
    out["gaps"] = num_list(s.gaps());
    return out;
}

json verdict_json(const Verdict &v)
{
    json out;
    out["holds"] = v.holds;
    out["witness"] = num_list(v.witness);
    out["detail"] = v.detail;
    return out;
}

std::string verdict_text(const Verdict &v)
{
    return v.holds ? "holds" : "fails: " + v.detail;
}

json series_json(const TruncatedSeries &f)
{
    json out;
    out["ring"] = f.ring().to_string();
    out["precision"] = f.precision();
    json terms = json::array();
    for (const auto &[e, c] : f.terms()) {
        terms.push_back(json::array({e, c.to_string()}));
    }
    out["terms"] = terms;
    return out;
}

json tuple_json(const SeriesTuple &f)
{
    json out;
    out["ring"] = f.ring().to_string();
    out["nvars"] = f.size();
    out["degree"] = f.degree();
    json comps = json::array();
    for (const auto &c : f.components()) {
        json terms = json::array();
        for (const auto &[u, a] : c.terms()) {
            terms.push_back(json::array({json(u), a.to_string()}));
        }
        comps.push_back(terms);
    }
    out["components"] = comps;
    out["text"] = format_tuple(f);
    return out;
}

exponent_t parse_precision(const std::string &text, const std::string &flag)
{
    const auto n = parse_natural(text, flag);
    if (n < 1 || n > 100000) {
        throw usage_error("flag " + flag + ": precision must lie in 1..100000");
    }
    return static_cast<exponent_t>(n);
}

TruncatedSeries read_series(const std::string &text, const RingDescriptor &ring, exponent_t n,
                            const std::string &flag, std::ostream &err)
{
    try {
        auto parsed = parse_series(text, ring, n);
        if (parsed.truncated) {
            err << "warning: " << flag << ": terms above x^" << n << " were discarded\n";
        }
        return parsed.series;
    } catch (const usage_error &e) {
        throw usage_error("flag " + flag + ": " + e.what() + "\n" + series_grammar);
    }
}

struct Options {
    std::string gens;
    std::string set;
    std::string bound;
    std::string smax;
    std::string direction;
    std::string n;
    std::string a;
    std::string count;
    std::string kmax;
    std::string f;
    std::string g;
    std::string ring = "z";
    std::string prec;
    std::string check_support;
    std::string nvars;
    std::string degree;
    std::string trials;
    std::string seed;
    std::string suite;
    std::string rings;
    std::string json_path;
    bool json = false;
};

int emit(std::ostream &out, const json &j)
{
    out << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_closure(const Options &o, std::ostream &out)
{
    const auto gens = positive_list(o.gens, "--gens");
    const auto bound = o.bound.empty() ? std::uint64_t(50) : parse_natural(o.bound, "--bound");
    const auto t = strong_closure(gens);
    const auto members = t.members(bound);
    if (o.json) {
        json j;
        j["generators"] = num_list(gens);
        j["minimal_generators"] = num_list(t.minimal_generators());
        j["bound"] = num(bound);
        j["members"] = num_list(members);
        j["shadow"] = additive_json(t.shadow(), t.shadow().minimal_generators());
        return emit(out, j);
    }
    out << join(members) << "\n";
    return exit_ok;
}

int cmd_check(const Options &o, std::ostream &out)
{
    if (o.gens.empty() == o.set.empty()) {
        throw usage_error("check: give exactly one of --gens or --set");
    }
    if (o.bound.empty()) {
        throw usage_error("check: --bound is required");
    }
    const auto bound = parse_natural(o.bound, "--bound");
    if (bound < 1) {
        throw usage_error("flag --bound: must be at least 1");
    }
    const auto smax = o.smax.empty() ? std::min<std::uint64_t>(6, bound) : parse_natural(o.smax, "--smax");
    MembershipFn member;
    if (!o.gens.empty()) {
        member = strong_closure(positive_list(o.gens, "--gens")).predicate();
    } else {
        member = explicit_set(positive_list(o.set, "--set"));
    }
    const auto c = is_strongly_closed(member, bound);
    const auto b = satisfies_partition_condition(member, bound, smax);
    const int code = (c.holds && b.holds) ? exit_ok : exit_verdict_fails;
    if (o.json) {
        json j;
        j["bound"] = num(bound);
        j["s_max"] = num(smax);
        j["condition_c"] = verdict_json(c);
        j["condition_b"] = verdict_json(b);
        emit(out, j);
        return code;
    }
    out << "condition (c): " << verdict_text(c) << "\n";
    out << "condition (b): " << verdict_text(b) << "\n";
    return code;
}

int cmd_translate(const Options &o, std::ostream &out)
{
    const auto gens = parse_list(o.gens, "--gens");
    const auto bound = o.bound.empty() ? std::uint64_t(30) : parse_natural(o.bound, "--bound");
    json j;
    std::vector<std::uint64_t> generators;
    std::vector<std::uint64_t> members;
    if (o.direction == "t2s") {
        for (auto x : gens) {
            if (x == 0) {
                throw usage_error("flag --gens: exponents of T must be positive");
            }
        }
        const auto s = to_additive(strong_closure(gens));
        generators = s.minimal_generators();
        members = s.members(0, bound);
        j = additive_json(s, generators);
    } else if (o.direction == "s2t") {
        for (auto y : gens) {
            if (y == 0) {
                throw usage_error("flag --gens: additive generators must be positive");
            }
        }
        const auto t = from_additive(AdditiveMonoid::from_generators(gens));
        generators = t.minimal_generators();
        members = t.members(bound);
        j["generators"] = num_list(generators);
    } else {
        throw usage_error("flag --direction: expected t2s or s2t");
    }
    if (o.json) {
        j["direction"] = o.direction;
        j["bound"] = num(bound);
        j["members"] = num_list(members);
        return emit(out, j);
    }
    out << "generators: " << join(generators) << "\n";
    out << "members: " << join(members) << "\n";
    return exit_ok;
}

int cmd_mingens(const Options &o, std::ostream &out)
{
    const auto s = AdditiveMonoid::from_generators(positive_list(o.gens, "--gens"));
    const auto mins = s.minimal_generators();
    if (o.json) {
        return emit(out, additive_json(s, mins));
    }
    out << join(mins) << "\n";
    return exit_ok;
}

int cmd_member(const Options &o, std::ostream &out)
{
    const auto s = AdditiveMonoid::from_generators(positive_list(o.gens, "--gens"));
    if (o.n.empty()) {
        throw usage_error("member: --n is required");
    }
    const auto n = parse_natural(o.n, "--n");
    const bool in = s.contains(n);
    if (o.json) {
        auto j = additive_json(s, s.minimal_generators());
        j["n"] = num(n);
        j["member"] = in;
        emit(out, j);
    } else {
        out << (in ? "true" : "false") << "\n";
    }
    return in ? exit_ok : exit_verdict_fails;
}

int cmd_primes(const Options &o, std::ostream &out, std::ostream &err)
{
    if (o.a.empty()) {
        throw usage_error("primes: --a is required");
    }
    const auto a = parse_natural(o.a, "--a");
    const auto count = o.count.empty() ? std::uint64_t(5) : parse_natural(o.count, "--count");
    const auto kmax = o.kmax.empty() ? std::uint64_t(100000) : parse_natural(o.kmax, "--kmax");
    const auto w = multiplicative_prime_witnesses(a, count, kmax);
    if (!w.complete) {
        err << "warning: only " << w.primes.size() << " of " << count << " primes found with k <= " << kmax << "\n";
    }
    if (o.json) {
        json j;
        j["a"] = num(a);
        j["primes"] = num_list(w.primes);
        j["k"] = num_list(w.steps);
        j["complete"] = w.complete;
        return emit(out, j);
    }
    out << join(w.primes) << "\n";
    return exit_ok;
}

int cmd_compose(const Options &o, std::ostream &out, std::ostream &err)
{
    const auto ring = RingDescriptor::parse(o.ring);
    const auto n = o.prec.empty() ? exponent_t(10) : parse_precision(o.prec, "--prec");
    if (o.f.empty() || o.g.empty()) {
        throw usage_error("compose: --f and --g are required\n" + std::string(series_grammar));
    }
    const auto f = read_series(o.f, ring, n, "--f", err);
    const auto g = read_series(o.g, ring, n, "--g", err);
    const auto h = compose(f, g);
    if (o.json) {
        return emit(out, series_json(h));
    }
    out << format_series(h) << "\n";
    return exit_ok;
}

int cmd_invert(const Options &o, std::ostream &out, std::ostream &err)
{
    const auto ring = RingDescriptor::parse(o.ring);
    const auto n = o.prec.empty() ? exponent_t(10) : parse_precision(o.prec, "--prec");
    if (o.f.empty()) {
        throw usage_error("invert: --f is required\n" + std::string(series_grammar));
    }
    const auto f = read_series(o.f, ring, n, "--f", err);
    std::optional<StrongMonoid> t;
    if (!o.check_support.empty()) {
        t = strong_closure(positive_list(o.check_support, "--check-support"));
    }
    json j;
    if (!is_invertible(f)) {
        const std::string msg = "not invertible: linear coefficient " + f.coeff(1).to_string() + " is not a unit of "
                                + ring.to_string();
        if (o.json) {
            j["invertible"] = false;
            j["detail"] = msg;
            emit(out, j);
        } else {
            out << msg << "\n";
        }
        return exit_verdict_fails;
    }
    const auto g = invert(f);
    int code = exit_ok;
    Verdict input_v;
    Verdict output_v;
    if (t) {
        input_v = is_supported_on(f, *t);
        output_v = is_supported_on(g, *t);
        if (!input_v.holds || !output_v.holds) {
            code = exit_verdict_fails;
        }
    }
    if (o.json) {
        j["invertible"] = true;
        j["inverse"] = series_json(g);
        if (t) {
            j["input_supported"] = verdict_json(input_v);
            j["inverse_supported"] = verdict_json(output_v);
        }
        emit(out, j);
        return code;
    }
    out << format_series(g) << "\n";
    if (t) {
        out << "input support in T: " << verdict_text(input_v) << "\n";
        out << "inverse support in T: " << verdict_text(output_v) << "\n";
    }
    return code;
}

std::size_t parse_nvars(const std::string &text)
{
    if (text.empty()) {
        throw usage_error("flag --n is required");
    }
    const auto n = parse_natural(text, "--n");
    if (n < 1 || n > 16) {
        throw usage_error("flag --n: number of variables must lie in 1..16");
    }
    return n;
}

int cmd_multi_compose(const Options &o, std::ostream &out)
{
    const auto ring = RingDescriptor::parse(o.ring);
    const auto nvars = parse_nvars(o.nvars);
    const auto d = o.prec.empty() ? exponent_t(8) : parse_precision(o.prec, "--prec");
    if (o.f.empty() || o.g.empty()) {
        throw usage_error("multi compose: --f and --g are required\n" + std::string(series_grammar));
    }
    auto read = [&](const std::string &text, const std::string &flag) {
        try {
            return parse_tuple(text, ring, nvars, d);
        } catch (const usage_error &e) {
            throw usage_error("flag " + flag + ": " + e.what() + "\n" + series_grammar);
        }
    };
    const auto h = compose_tuple(read(o.f, "--f"), read(o.g, "--g"));
    if (o.json) {
        return emit(out, tuple_json(h));
    }
    out << format_tuple(h) << "\n";
    return exit_ok;
}

std::vector<RingDescriptor> parse_rings(const std::string &text)
{
    std::vector<RingDescriptor> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(RingDescriptor::parse(item));
    }
    if (out.empty()) {
        throw usage_error("flag --ring: at least one ring is required");
    }
    return out;
}

TrialConfig config_from(const Options &o)
{
    if (o.seed.empty()) {
        throw usage_error("flag --seed is required for randomized subcommands");
    }
    TrialConfig c;
    c.seed = parse_natural(o.seed, "--seed");
    if (!o.trials.empty()) {
        c.trials = parse_natural(o.trials, "--trials");
    }
    if (!o.bound.empty()) {
        c.bound = parse_natural(o.bound, "--bound");
    }
    if (!o.prec.empty()) {
        c.precision = parse_precision(o.prec, "--prec");
    }
    if (!o.smax.empty()) {
        c.s_max = parse_natural(o.smax, "--smax");
    }
    if (!o.rings.empty()) {
        c.rings = parse_rings(o.rings);
    }
    if (!o.gens.empty()) {
        c.gens = positive_list(o.gens, "--gens");
    }
    if (!o.nvars.empty()) {
        c.nvars = parse_nvars(o.nvars);
    }
    if (!o.degree.empty()) {
        c.degree = parse_precision(o.degree, "--degree");
    }
    c.validate();
    return c;
}

int report_out(const std::vector<Report> &reports, const Options &o, std::ostream &out, std::ostream &err)
{
    bool all = true;
    json j;
    json arr = json::array();
    for (const auto &r : reports) {
        all = all && r.passed();
        arr.push_back(r.to_json());
        err << "timing: suite " << r.suite << " took " << std::fixed << std::setprecision(1) << r.duration_ms
            << " ms\n";
    }
    j["reports"] = arr;
    j["passed"] = all;

    if (o.json_path == "-" || (o.json && o.json_path.empty())) {
        emit(out, j);
        return all ? exit_ok : exit_verdict_fails;
    }
    for (const auto &r : reports) {
        for (const auto &p : r.properties) {
            out << r.suite << "/" << p.name << ": " << (p.as_predicted() ? "ok" : "FAILED") << " (expected "
                << (p.expect_pass ? "pass" : "fail") << ", observed " << (p.observed_pass ? "pass" : "fail")
                << ", cases " << p.cases << ")\n";
            if (!p.as_predicted()) {
                for (const auto &w : p.witnesses) {
                    out << "  witness: " << w.dump() << "\n";
                }
            } else if (!p.expect_pass && !p.witnesses.empty()) {
                out << "  witness: " << p.witnesses.front().dump() << "\n";
            }
        }
    }
    out << (all ? "all suites passed" : "some suites FAILED") << "\n";
    if (!o.json_path.empty()) {
        std::ofstream file(o.json_path);
        if (!file) {
            throw usage_error("flag --json: cannot write '" + o.json_path + "'");
        }
        file << j.dump(2) << "\n";
    }
    return all ? exit_ok : exit_verdict_fails;
}

int cmd_multi_check(const Options &o, std::ostream &out, std::ostream &err)
{
    auto c = config_from(o);
    if (o.gens.empty()) {
        throw usage_error("multi check: --gens is required");
    }
    if (!o.nvars.empty()) {
        c.nvars = parse_nvars(o.nvars);
    }
    if (o.rings.empty()) {
        c.rings = {RingDescriptor::parse(o.ring)};
    }
    const auto t = strong_closure(c.gens);
    return report_out({check_nd(c, t, c.nvars)}, o, out, err);
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err)
{
    const auto c = config_from(o);
    const auto suite = o.suite.empty() ? std::string("all") : o.suite;
    const auto t = strong_closure(c.gens);
    std::vector<Report> reports;
    if (suite != "main" && suite != "inverse" && suite != "group" && suite != "nd" && suite != "all") {
        throw usage_error("flag --suite: expected main | inverse | group | nd | all");
    }
    if (suite == "main" || suite == "all") {
        reports.push_back(check_theorem_main(c));
    }
    if (suite == "inverse" || suite == "all") {
        reports.push_back(check_inverse_support(c, t));
    }
    if (suite == "group" || suite == "all") {
        reports.push_back(check_group_axioms(c, t));
    }
    if (suite == "nd" || suite == "all") {
        reports.push_back(check_nd(c, t, c.nvars));
    }
    return report_out(reports, o, out, err);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Composition monoids of formal power series with restricted exponents", "fpsmon"};
    app.require_subcommand(1);
    Options o;

    auto json_flag = [&](CLI::App *sub) { sub->add_flag("--json", o.json, "Emit a single JSON object"); };

    auto *closure = app.add_subcommand("closure", "Strong closure T = 1 + <X - 1> of exponent generators");
    closure->add_option("--gens", o.gens, "Comma-separated generators X")->required();
    closure->add_option("--bound", o.bound, "List members up to this bound (default 50)");
    json_flag(closure);

    auto *check = app.add_subcommand("check", "Certify conditions (b) and (c) up to a bound");
    check->add_option("--gens", o.gens, "Generators of T (strong closure)");
    check->add_option("--set", o.set, "Explicit exponent set");
    check->add_option("--bound", o.bound, "Exponent bound B")->required();
    check->add_option("--smax", o.smax, "Largest s for condition (b) (default min(6, B))");
    json_flag(check);

    auto *translate = app.add_subcommand("translate", "Move between T and its additive shadow S = T - 1");
    translate->add_option("--gens", o.gens, "Generators on the source side")->required();
    translate->add_option("--direction", o.direction, "t2s | s2t")->required();
    translate->add_option("--bound", o.bound, "List members up to this bound (default 30)");
    json_flag(translate);

    auto *mingens = app.add_subcommand("mingens", "Minimal generators of an additive monoid");
    mingens->add_option("--gens", o.gens, "Comma-separated generators")->required();
    json_flag(mingens);

    auto *member = app.add_subcommand("member", "Membership in an additive monoid");
    member->add_option("--gens", o.gens, "Comma-separated generators")->required();
    member->add_option("--n", o.n, "Natural number to test")->required();
    json_flag(member);

    auto *primes = app.add_subcommand("primes", "Primes of the form a + k(a - 1)");
    primes->add_option("--a", o.a, "Base a >= 2")->required();
    primes->add_option("--count", o.count, "How many primes (default 5)");
    primes->add_option("--kmax", o.kmax, "Largest k scanned (default 100000)");
    json_flag(primes);

    auto *compose_cmd = app.add_subcommand("compose", "Truncated composition f(g(x))");
    compose_cmd->add_option("--f", o.f, "Outer series")->required();
    compose_cmd->add_option("--g", o.g, "Inner series")->required();
    compose_cmd->add_option("--ring", o.ring, "z | zmod:<m> | q (default z)");
    compose_cmd->add_option("--prec", o.prec, "Precision N (default 10)");
    json_flag(compose_cmd);

    auto *invert_cmd = app.add_subcommand("invert", "Compositional inverse");
    invert_cmd->add_option("--f", o.f, "Series to invert")->required();
    invert_cmd->add_option("--ring", o.ring, "z | zmod:<m> | q (default z)");
    invert_cmd->add_option("--prec", o.prec, "Precision N (default 10)");
    invert_cmd->add_option("--check-support", o.check_support, "Generators of T; check both supports lie in T");
    json_flag(invert_cmd);

    auto *multi = app.add_subcommand("multi", "Several-variable series tuples");
    multi->require_subcommand(1);
    auto *multi_compose = multi->add_subcommand("compose", "Compose two n-tuples");
    multi_compose->add_option("--n", o.nvars, "Number of variables")->required();
    multi_compose->add_option("--f", o.f, "Outer tuple, components separated by '|'")->required();
    multi_compose->add_option("--g", o.g, "Inner tuple")->required();
    multi_compose->add_option("--prec", o.prec, "Total degree bound (default 8)");
    multi_compose->add_option("--ring", o.ring, "z | zmod:<m> | q (default z)");
    json_flag(multi_compose);
    auto *multi_check = multi->add_subcommand("check", "Randomized closure check for U = {u : |u| in T}");
    multi_check->add_option("--gens", o.gens, "Generators of T")->required();
    multi_check->add_option("--n", o.nvars, "Number of variables (2..4)")->required();
    multi_check->add_option("--degree", o.degree, "Total degree bound (default 10)");
    multi_check->add_option("--trials", o.trials, "Trials per ring (default 100)");
    multi_check->add_option("--seed", o.seed, "Random seed")->required();
    multi_check->add_option("--ring", o.rings, "Comma-separated rings (default z)");
    multi_check->add_option("--json", o.json_path, "Write the report to FILE ('-' for stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Run the conformance suites");
    verify_cmd->add_option("--suite", o.suite, "main | inverse | group | nd | all (default all)");
    verify_cmd->add_option("--gens", o.gens, "Generators of the strongly closed T (default 4,6)");
    verify_cmd->add_option("--seed", o.seed, "Random seed")->required();
    verify_cmd->add_option("--trials", o.trials, "Trials per ring (default 100)");
    verify_cmd->add_option("--prec", o.prec, "Series precision N (default 30)");
    verify_cmd->add_option("--bound", o.bound, "Exponent bound B (default 60)");
    verify_cmd->add_option("--smax", o.smax, "Largest s for condition (b) (default 6)");
    verify_cmd->add_option("--ring", o.rings, "Comma-separated rings (default z,zmod:7)");
    verify_cmd->add_option("--n", o.nvars, "Variables for the nd suite (default 2)");
    verify_cmd->add_option("--degree", o.degree, "Degree bound for the nd suite (default 10)");
    verify_cmd->add_option("--json", o.json_path, "Write the report to FILE ('-' for stdout)");

    std::vector<std::string> argv_store{"fpsmon"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'fpsmon --help' or 'fpsmon <subcommand> --help' for the flag grammar\n";
        return exit_usage;
    }

    try {
        if (closure->parsed()) {
            return cmd_closure(o, out);
        }
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (translate->parsed()) {
            return cmd_translate(o, out);
        }
        if (mingens->parsed()) {
            return cmd_mingens(o, out);
        }
        if (member->parsed()) {
            return cmd_member(o, out);
        }
        if (primes->parsed()) {
            return cmd_primes(o, out, err);
        }
        if (compose_cmd->parsed()) {
            return cmd_compose(o, out, err);
        }
        if (invert_cmd->parsed()) {
            return cmd_invert(o, out, err);
        }
        if (multi_compose->parsed()) {
            return cmd_multi_compose(o, out);
        }
        if (multi_check->parsed()) {
            return cmd_multi_check(o, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out, err);
        }
    } catch (const not_invertible &e) {
        err << "error: " << e.what() << "\n";
        return exit_verdict_fails;
    } catch (const usage_error &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    err << "usage error: no subcommand\n";
    return exit_usage;
}

} // namespace fpsmon
