#include <fpsmon/errors.hpp>
#include <fpsmon/multiseries.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fpsmon
{

std::uint64_t norm(const Monomial &u)
{
    return std::accumulate(u.begin(), u.end(), std::uint64_t(0));
}

bool GradedLexLess::operator()(const Monomial &a, const Monomial &b) const
{
    const auto na = norm(a);
    const auto nb = norm(b);
    if (na != nb) {
        return na < nb;
    }
    // Larger leading exponents sort first.
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace
{

void monomials_rec(std::size_t nvars, std::uint64_t remaining, Monomial &cur, std::vector<Monomial> &out)
{
    if (cur.size() + 1 == nvars) {
        cur.push_back(static_cast<std::uint32_t>(remaining));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint64_t e = remaining + 1; e-- > 0;) {
        cur.push_back(static_cast<std::uint32_t>(e));
        monomials_rec(nvars, remaining - e, cur, out);
        cur.pop_back();
    }
}

void require_compatible(const MultiSeries &f, const MultiSeries &g)
{
    if (!(f.ring() == g.ring())) {
        throw usage_error("ring mismatch: " + f.ring().to_string() + " vs " + g.ring().to_string());
    }
    if (f.nvars() != g.nvars()) {
        throw usage_error("variable count mismatch: " + std::to_string(f.nvars()) + " vs "
                          + std::to_string(g.nvars()));
    }
}

} // namespace

std::vector<Monomial> monomials_of_norm(std::size_t nvars, std::uint64_t k)
{
    std::vector<Monomial> out;
    if (nvars == 0 || k == 0) {
        return out;
    }
    Monomial cur;
    monomials_rec(nvars, k, cur, out);
    return out;
}

std::string format_monomial(const Monomial &u)
{
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "x" + std::to_string(i + 1);
        if (u[i] != 1) {
            out += "^" + std::to_string(u[i]);
        }
    }
    return out;
}

MultiSeries::MultiSeries(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree)
    : m_ring(ring), m_nvars(nvars), m_degree(degree)
{
    if (nvars < 1) {
        throw usage_error("need at least one variable");
    }
    if (degree < 1) {
        throw usage_error("degree bound must be at least 1");
    }
}

MultiSeries MultiSeries::variable(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree, std::size_t i)
{
    if (i < 1 || i > nvars) {
        throw usage_error("variable index " + std::to_string(i) + " outside 1.." + std::to_string(nvars));
    }
    MultiSeries f(ring, nvars, degree);
    Monomial u(nvars, 0);
    u[i - 1] = 1;
    f.set_coeff(u, RingElement::one(ring));
    return f;
}

RingElement MultiSeries::coeff(const Monomial &u) const
{
    auto it = m_terms.find(u);
    return it == m_terms.end() ? RingElement::zero(m_ring) : it->second;
}

void MultiSeries::set_coeff(const Monomial &u, const RingElement &c)
{
    if (u.size() != m_nvars) {
        throw usage_error("monomial has " + std::to_string(u.size()) + " exponents, expected "
                          + std::to_string(m_nvars));
    }
    const auto d = norm(u);
    if (d == 0) {
        throw usage_error("constant term not allowed");
    }
    if (!(c.ring() == m_ring)) {
        throw usage_error("ring mismatch: " + c.ring().to_string() + " vs " + m_ring.to_string());
    }
    if (d > m_degree) {
        return;
    }
    if (c.is_zero()) {
        m_terms.erase(u);
    } else {
        m_terms.insert_or_assign(u, c);
    }
}

void MultiSeries::add_to_coeff(const Monomial &u, const RingElement &c)
{
    if (norm(u) > m_degree) {
        return;
    }
    set_coeff(u, coeff(u) + c);
}

MultiSeries MultiSeries::truncate(std::uint32_t degree) const
{
    MultiSeries out(m_ring, m_nvars, std::min(degree, m_degree));
    for (const auto &[u, c] : m_terms) {
        if (norm(u) > out.m_degree) {
            break;
        }
        out.m_terms.emplace_hint(out.m_terms.end(), u, c);
    }
    return out;
}

MultiSeries add_nd(const MultiSeries &f, const MultiSeries &g)
{
    require_compatible(f, g);
    auto out = f.truncate(g.degree());
    for (const auto &[u, c] : g.terms()) {
        out.add_to_coeff(u, c);
    }
    return out;
}

MultiSeries scale_nd(const RingElement &c, const MultiSeries &f)
{
    MultiSeries out(f.ring(), f.nvars(), f.degree());
    for (const auto &[u, a] : f.terms()) {
        out.set_coeff(u, c * a);
    }
    return out;
}

MultiSeries mul_nd(const MultiSeries &f, const MultiSeries &g)
{
    require_compatible(f, g);
    const auto d = std::min(f.degree(), g.degree());
    MultiSeries::coeff_map acc;
    Monomial w(f.nvars());
    for (const auto &[u, a] : f.terms()) {
        const auto nu = norm(u);
        if (nu + 1 > d) {
            break;
        }
        for (const auto &[v, b] : g.terms()) {
            if (nu + norm(v) > d) {
                break;
            }
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] = u[i] + v[i];
            }
            auto it = acc.find(w);
            if (it == acc.end()) {
                acc.emplace(w, a * b);
            } else {
                it->second.add_product(a, b);
            }
        }
    }
    MultiSeries out(f.ring(), f.nvars(), d);
    for (const auto &[u, c] : acc) {
        out.set_coeff(u, c);
    }
    return out;
}

SeriesTuple::SeriesTuple(std::vector<MultiSeries> components) : m_components(std::move(components))
{
    if (m_components.empty()) {
        throw usage_error("a series tuple needs at least one component");
    }
    const auto &first = m_components.front();
    if (first.nvars() != m_components.size()) {
        throw usage_error("tuple has " + std::to_string(m_components.size()) + " components but "
                          + std::to_string(first.nvars()) + " variables");
    }
    for (const auto &c : m_components) {
        require_compatible(first, c);
        if (c.degree() != first.degree()) {
            throw usage_error("tuple components must share one degree bound");
        }
    }
}

SeriesTuple SeriesTuple::identity(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree)
{
    std::vector<MultiSeries> comps;
    for (std::size_t i = 1; i <= nvars; ++i) {
        comps.push_back(MultiSeries::variable(ring, nvars, degree, i));
    }
    return SeriesTuple(std::move(comps));
}

namespace
{

// Memoized products g^u = g_1^{u_1} ... g_n^{u_n}, each built from g^{u - e_j}
// times g_j with j the last nonzero slot, so every monomial costs one product.
class PowerProducts
{
public:
    PowerProducts(const SeriesTuple &g, std::uint32_t degree) : m_degree(degree)
    {
        for (const auto &c : g.components()) {
            m_g.push_back(c.truncate(degree));
        }
    }

    const MultiSeries &get(const Monomial &u)
    {
        auto it = m_memo.find(u);
        if (it != m_memo.end()) {
            return it->second;
        }
        std::size_t j = u.size();
        while (j > 0 && u[j - 1] == 0) {
            --j;
        }
        --j;
        Monomial prev = u;
        --prev[j];
        MultiSeries value = norm(prev) == 0 ? m_g[j] : mul_nd(get(prev), m_g[j]);
        return m_memo.emplace(u, std::move(value)).first->second;
    }

private:
    std::uint32_t m_degree;
    std::vector<MultiSeries> m_g;
    std::map<Monomial, MultiSeries, GradedLexLess> m_memo;
};

MultiSeries substitute_with(const MultiSeries &f, PowerProducts &powers, std::uint32_t degree)
{
    MultiSeries out(f.ring(), f.nvars(), degree);
    MultiSeries::coeff_map acc;
    for (const auto &[u, a] : f.terms()) {
        if (norm(u) > degree) {
            break;
        }
        for (const auto &[w, c] : powers.get(u).terms()) {
            auto it = acc.find(w);
            if (it == acc.end()) {
                acc.emplace(w, a * c);
            } else {
                it->second.add_product(a, c);
            }
        }
    }
    for (const auto &[w, c] : acc) {
        out.set_coeff(w, c);
    }
    return out;
}

} // namespace

MultiSeries substitute(const MultiSeries &f, const SeriesTuple &g)
{
    require_compatible(f, g[0]);
    if (g.size() != f.nvars()) {
        throw usage_error("substitution needs one series per variable");
    }
    const auto d = std::min(f.degree(), g.degree());
    PowerProducts powers(g, d);
    return substitute_with(f, powers, d);
}

SeriesTuple compose_tuple(const SeriesTuple &f, const SeriesTuple &g)
{
    require_compatible(f[0], g[0]);
    const auto d = std::min(f.degree(), g.degree());
    PowerProducts powers(g, d);
    std::vector<MultiSeries> comps;
    for (const auto &fi : f.components()) {
        comps.push_back(substitute_with(fi, powers, d));
    }
    return SeriesTuple(std::move(comps));
}

namespace
{

class MultiParser
{
public:
    MultiParser(std::string_view text, std::size_t base, const RingDescriptor &ring, std::size_t nvars,
                std::uint32_t degree)
        : m_text(text), m_base(base), m_ring(ring), m_nvars(nvars), m_out(ring, nvars, degree)
    {
    }

    MultiSeries run()
    {
        skip_ws();
        if (at_end()) {
            throw parse_error("empty series", m_base);
        }
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++m_pos;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-'", where());
            }
            term(negative);
            first = false;
            skip_ws();
        }
        return std::move(m_out);
    }

private:
    std::size_t where() const
    {
        return m_base + m_pos;
    }
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return m_text[m_pos];
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
    }
    std::string_view read_digits()
    {
        const auto start = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        return m_text.substr(start, m_pos - start);
    }
    std::uint64_t read_number(const char *what)
    {
        const auto at = where();
        auto digits = read_digits();
        if (digits.empty()) {
            throw parse_error(std::string("expected ") + what, at);
        }
        if (digits.size() > 9) {
            throw parse_error(std::string(what) + " too large", at);
        }
        return std::stoull(std::string(digits));
    }

    void factor(Monomial &u)
    {
        if (at_end() || peek() != 'x') {
            throw parse_error("expected variable x<i>", where());
        }
        ++m_pos;
        std::size_t idx = 1;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto at = where();
            idx = read_number("variable index");
            if (idx < 1 || idx > m_nvars) {
                throw parse_error("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(m_nvars),
                                  at);
            }
        } else if (m_nvars != 1) {
            throw parse_error("variable needs an index x1..x" + std::to_string(m_nvars), where());
        }
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++m_pos;
            skip_ws();
            e = read_number("exponent");
        }
        u[idx - 1] += static_cast<std::uint32_t>(e);
    }

    void term(bool negative)
    {
        const auto start = where();
        RingElement c = RingElement::one(m_ring);
        bool has_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit(read_digits());
            if (!at_end() && peek() == '/') {
                ++m_pos;
                auto den = read_digits();
                if (den.empty()) {
                    throw parse_error("expected denominator", where());
                }
                lit += "/";
                lit += den;
            }
            c = RingElement::parse(lit, m_ring);
            has_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++m_pos;
                skip_ws();
            }
        }
        Monomial u(m_nvars, 0);
        if (at_end() || peek() != 'x') {
            if (!has_coeff) {
                throw parse_error("expected coefficient or variable", where());
            }
            if (!c.is_zero()) {
                throw constant_term_error(start);
            }
            return;
        }
        factor(u);
        skip_ws();
        while (!at_end() && (peek() == '*' || peek() == 'x')) {
            if (peek() == '*') {
                ++m_pos;
                skip_ws();
            }
            factor(u);
            skip_ws();
        }
        if (norm(u) == 0) {
            throw constant_term_error(start);
        }
        if (negative) {
            c = -c;
        }
        m_out.add_to_coeff(u, c);
    }

    std::string_view m_text;
    std::size_t m_base;
    RingDescriptor m_ring;
    std::size_t m_nvars;
    MultiSeries m_out;
    std::size_t m_pos = 0;
};

} // namespace

MultiSeries parse_multiseries(std::string_view text, const RingDescriptor &ring, std::size_t nvars,
                              std::uint32_t degree)
{
    return MultiParser(text, 0, ring, nvars, degree).run();
}

SeriesTuple parse_tuple(std::string_view text, const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree)
{
    std::vector<MultiSeries> comps;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        const auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        comps.push_back(MultiParser(piece, start, ring, nvars, degree).run());
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    if (comps.size() != nvars) {
        throw usage_error("tuple has " + std::to_string(comps.size()) + " components, expected "
                          + std::to_string(nvars));
    }
    return SeriesTuple(std::move(comps));
}

std::string format_multiseries(const MultiSeries &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[u, c] : f.terms()) {
        const auto &v = c.value();
        const bool negative = sgn(v) < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        mpq_class mag = abs(v);
        if (mag != 1) {
            out += mag.get_str();
            out += "*";
        }
        out += format_monomial(u);
    }
    return out;
}

std::string format_tuple(const SeriesTuple &f)
{
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) {
            out += " | ";
        }
        out += format_multiseries(f[i]);
    }
    return out;
}

SupportSetND SupportSetND::from_norms(MembershipFn norms_in_t, std::size_t nvars, std::uint32_t degree)
{
    SupportSetND u(nvars, degree);
    u.m_members = std::move(norms_in_t);
    return u;
}

SupportSetND SupportSetND::from_explicit(std::vector<Monomial> members, std::size_t nvars, std::uint32_t degree)
{
    SupportSetND u(nvars, degree);
    std::map<Monomial, bool, GradedLexLess> set;
    for (auto &m : members) {
        if (m.size() != nvars || norm(m) == 0) {
            throw usage_error("explicit support set contains an invalid monomial");
        }
        set.emplace(std::move(m), true);
    }
    u.m_members = std::move(set);
    return u;
}

bool SupportSetND::contains(const Monomial &u) const
{
    if (u.size() != m_nvars) {
        return false;
    }
    const auto d = norm(u);
    if (d == 0) {
        return false;
    }
    if (const auto *fn = std::get_if<MembershipFn>(&m_members)) {
        return (*fn)(d);
    }
    const auto &set = std::get<std::map<Monomial, bool, GradedLexLess>>(m_members);
    return set.count(u) != 0;
}

std::vector<Monomial> SupportSetND::enumerate() const
{
    std::vector<Monomial> out;
    for (std::uint64_t k = 1; k <= m_degree; ++k) {
        for (auto &u : monomials_of_norm(m_nvars, k)) {
            if (contains(u)) {
                out.push_back(std::move(u));
            }
        }
    }
    return out;
}

SupportSetND support_from_T(const StrongMonoid &t, std::size_t nvars, std::uint32_t degree)
{
    if (nvars < 1 || degree < 1) {
        throw usage_error("support set needs n >= 1 and D >= 1");
    }
    return SupportSetND::from_norms(t.predicate(), nvars, degree);
}

Verdict is_norm_saturated(const SupportSetND &set)
{
    for (std::uint64_t k = 1; k <= set.degree(); ++k) {
        const auto level = monomials_of_norm(set.nvars(), k);
        for (const auto &u : level) {
            if (!set.contains(u)) {
                continue;
            }
            for (const auto &v : level) {
                if (!set.contains(v)) {
                    std::vector<std::uint64_t> w(u.begin(), u.end());
                    w.insert(w.end(), v.begin(), v.end());
                    return Verdict::fail(std::move(w), "u=" + format_monomial(u) + " in U but v=" + format_monomial(v)
                                                           + " of equal norm is not");
                }
            }
        }
    }
    return Verdict::pass();
}

Verdict is_supported_on_nd(const MultiSeries &f, const SupportSetND &set)
{
    for (const auto &[u, c] : f.terms()) {
        if (!set.contains(u)) {
            std::vector<std::uint64_t> w{1};
            w.insert(w.end(), u.begin(), u.end());
            return Verdict::fail(std::move(w), "monomial " + format_monomial(u) + " not in U");
        }
    }
    return Verdict::pass();
}

Verdict is_supported_on_nd(const SeriesTuple &f, const SupportSetND &set)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].nvars() != set.nvars()) {
            throw usage_error("support set dimension does not match the tuple");
        }
        for (const auto &[u, c] : f[i].terms()) {
            if (!set.contains(u)) {
                std::vector<std::uint64_t> w{i + 1};
                w.insert(w.end(), u.begin(), u.end());
                return Verdict::fail(std::move(w), "component " + std::to_string(i + 1) + " has monomial "
                                                       + format_monomial(u) + " not in U");
            }
        }
    }
    return Verdict::pass();
}

} // namespace fpsmon
