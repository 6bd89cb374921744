#include <fpsmon/errors.hpp>
#include <fpsmon/series.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace fpsmon
{

namespace
{

void require_same_ring(const TruncatedSeries &f, const TruncatedSeries &g)
{
    if (!(f.ring() == g.ring())) {
        throw usage_error("ring mismatch: " + f.ring().to_string() + " vs " + g.ring().to_string());
    }
}

using term_list = std::vector<std::pair<exponent_t, RingElement>>;

term_list to_list(const TruncatedSeries &f)
{
    return {f.terms().begin(), f.terms().end()};
}

// Dense accumulator indexed by exponent 0..N.
std::vector<RingElement> zero_dense(const RingDescriptor &ring, exponent_t n)
{
    return std::vector<RingElement>(std::size_t(n) + 1, RingElement::zero(ring));
}

TruncatedSeries from_dense(const RingDescriptor &ring, exponent_t n, const std::vector<RingElement> &dense)
{
    TruncatedSeries out(ring, n);
    for (exponent_t e = 1; e <= n && e < dense.size(); ++e) {
        out.set_coeff(e, dense[e]);
    }
    return out;
}

// Product of two term lists truncated at degree n, into a dense buffer.
std::vector<RingElement> mul_dense(const RingDescriptor &ring, const term_list &a, const term_list &b, exponent_t n)
{
    auto acc = zero_dense(ring, n);
    for (const auto &[i, x] : a) {
        if (i > n) {
            break;
        }
        for (const auto &[j, y] : b) {
            if (i + j > n) {
                break;
            }
            acc[i + j].add_product(x, y);
        }
    }
    return acc;
}

term_list dense_to_list(const std::vector<RingElement> &dense)
{
    term_list out;
    for (exponent_t e = 1; e < dense.size(); ++e) {
        if (!dense[e].is_zero()) {
            out.emplace_back(e, dense[e]);
        }
    }
    return out;
}

class SeriesParser
{
public:
    SeriesParser(std::string_view text, const RingDescriptor &ring, exponent_t precision)
        : m_text(text), m_ring(ring), m_out{TruncatedSeries(ring, precision)}
    {
    }

    ParsedSeries run()
    {
        skip_ws();
        if (at_end()) {
            throw parse_error("empty series", 0);
        }
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++m_pos;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-'", m_pos);
            }
            term(negative);
            first = false;
            skip_ws();
        }
        return std::move(m_out);
    }

private:
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

    void term(bool negative)
    {
        const auto start = m_pos;
        RingElement c = RingElement::one(m_ring);
        bool has_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit(read_digits());
            if (!at_end() && peek() == '/') {
                ++m_pos;
                auto den = read_digits();
                if (den.empty()) {
                    throw parse_error("expected denominator", m_pos);
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
                if (at_end() || peek() != 'x') {
                    throw parse_error("expected 'x' after '*'", m_pos);
                }
            }
        }
        if (at_end() || peek() != 'x') {
            if (!has_coeff) {
                throw parse_error("expected coefficient or 'x'", m_pos);
            }
            if (!c.is_zero()) {
                throw constant_term_error(start);
            }
            return;
        }
        ++m_pos;
        exponent_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++m_pos;
            skip_ws();
            const auto epos = m_pos;
            auto digits = read_digits();
            if (digits.empty()) {
                throw parse_error("expected exponent after '^'", m_pos);
            }
            if (digits.size() > 9) {
                throw parse_error("exponent too large", epos);
            }
            e = static_cast<exponent_t>(std::stoul(std::string(digits)));
            if (e == 0) {
                throw constant_term_error(start);
            }
        }
        if (negative) {
            c = -c;
        }
        if (e > m_out.series.precision()) {
            m_out.truncated = true;
            return;
        }
        m_out.series.set_coeff(e, m_out.series.coeff(e) + c);
    }

    std::string_view m_text;
    RingDescriptor m_ring;
    ParsedSeries m_out;
    std::size_t m_pos = 0;
};

} // namespace

TruncatedSeries::TruncatedSeries(const RingDescriptor &ring, exponent_t precision) : m_ring(ring), m_precision(precision)
{
    if (precision < 1) {
        throw usage_error("precision must be at least 1");
    }
}

TruncatedSeries TruncatedSeries::identity(const RingDescriptor &ring, exponent_t precision)
{
    return monomial(RingElement::one(ring), 1, precision);
}

TruncatedSeries TruncatedSeries::monomial(const RingElement &c, exponent_t e, exponent_t precision)
{
    TruncatedSeries f(c.ring(), precision);
    if (e <= precision) {
        f.set_coeff(e, c);
    }
    return f;
}

RingElement TruncatedSeries::coeff(exponent_t e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? RingElement::zero(m_ring) : it->second;
}

void TruncatedSeries::set_coeff(exponent_t e, const RingElement &c)
{
    if (e == 0 || e > m_precision) {
        throw usage_error("exponent " + std::to_string(e) + " outside 1.." + std::to_string(m_precision));
    }
    if (!(c.ring() == m_ring)) {
        throw usage_error("ring mismatch: " + c.ring().to_string() + " vs " + m_ring.to_string());
    }
    if (c.is_zero()) {
        m_terms.erase(e);
    } else {
        m_terms.insert_or_assign(e, c);
    }
}

TruncatedSeries TruncatedSeries::truncate(exponent_t precision) const
{
    TruncatedSeries out(m_ring, std::min(precision, m_precision));
    for (const auto &[e, c] : m_terms) {
        if (e > out.m_precision) {
            break;
        }
        out.m_terms.emplace_hint(out.m_terms.end(), e, c);
    }
    return out;
}

ParsedSeries parse_series(std::string_view text, const RingDescriptor &ring, exponent_t precision)
{
    return SeriesParser(text, ring, precision).run();
}

std::string format_series(const TruncatedSeries &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : f.terms()) {
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
        out += "x";
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::optional<exponent_t> order(const TruncatedSeries &f)
{
    if (f.is_zero()) {
        return std::nullopt;
    }
    return f.terms().begin()->first;
}

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_ring(f, g);
    auto out = f.truncate(g.precision());
    for (const auto &[e, c] : g.terms()) {
        if (e > out.precision()) {
            break;
        }
        out.set_coeff(e, out.coeff(e) + c);
    }
    return out;
}

TruncatedSeries negate(const TruncatedSeries &f)
{
    TruncatedSeries out(f.ring(), f.precision());
    for (const auto &[e, c] : f.terms()) {
        out.set_coeff(e, -c);
    }
    return out;
}

TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g)
{
    return add(f, negate(g));
}

TruncatedSeries scale(const RingElement &c, const TruncatedSeries &f)
{
    if (!(c.ring() == f.ring())) {
        throw usage_error("ring mismatch: " + c.ring().to_string() + " vs " + f.ring().to_string());
    }
    TruncatedSeries out(f.ring(), f.precision());
    for (const auto &[e, a] : f.terms()) {
        out.set_coeff(e, c * a);
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_ring(f, g);
    const auto n = std::min(f.precision(), g.precision());
    return from_dense(f.ring(), n, mul_dense(f.ring(), to_list(f), to_list(g), n));
}

TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_ring(f, g);
    const auto n = std::min(f.precision(), g.precision());
    const auto &ring = f.ring();
    if (!g.is_zero() && order(g) < exponent_t(1)) {
        throw usage_error("inner series must have zero constant term");
    }
    auto acc = zero_dense(ring, n);
    const auto g_terms = g.truncate(n);
    const term_list g_list = to_list(g_terms);
    // Running power g^t; order(g^t) >= t, so t never needs to exceed n.
    term_list power = g_list;
    exponent_t t = 1;
    for (const auto &[e, a] : f.terms()) {
        if (e > n) {
            break;
        }
        while (t < e && !power.empty()) {
            power = dense_to_list(mul_dense(ring, power, g_list, n));
            ++t;
        }
        if (power.empty()) {
            break;
        }
        for (const auto &[k, c] : power) {
            acc[k].add_product(a, c);
        }
    }
    return from_dense(ring, n, acc);
}

std::vector<exponent_t> support(const TruncatedSeries &f)
{
    std::vector<exponent_t> out;
    out.reserve(f.terms().size());
    for (const auto &[e, c] : f.terms()) {
        out.push_back(e);
    }
    return out;
}

Verdict is_supported_on(const TruncatedSeries &f, const MembershipFn &member)
{
    for (const auto &[e, c] : f.terms()) {
        if (!member(e)) {
            return Verdict::fail({e}, "exponent " + std::to_string(e) + " (coefficient " + c.to_string()
                                          + ") not in T");
        }
    }
    return Verdict::pass();
}

Verdict is_supported_on(const TruncatedSeries &f, const StrongMonoid &t)
{
    return is_supported_on(f, t.predicate());
}

bool is_invertible(const TruncatedSeries &f)
{
    return inverse_unit(f.coeff(1)).has_value();
}

TruncatedSeries invert(const TruncatedSeries &f)
{
    const auto &ring = f.ring();
    const auto n = f.precision();
    auto a1_inv = inverse_unit(f.coeff(1));
    if (!a1_inv) {
        throw not_invertible("linear coefficient " + f.coeff(1).to_string() + " is not a unit of " + ring.to_string());
    }
    const auto minus_a1_inv = -*a1_inv;

    // b[m] holds the inverse's coefficients; pw[t][m] = [x^m] (b_1 x + b_2 x^2 + ...)^t.
    // Column m of pw only involves b_1..b_{m-t+1}, so for t >= 2 it is known
    // before b_m is solved for.
    std::vector<RingElement> b = zero_dense(ring, n);
    std::vector<std::vector<RingElement>> pw(std::size_t(n) + 1);
    pw[1] = zero_dense(ring, n);
    b[1] = *a1_inv;
    pw[1][1] = b[1];

    term_list higher;
    for (const auto &[e, a] : f.terms()) {
        if (e >= 2) {
            higher.emplace_back(e, a);
        }
    }

    for (exponent_t m = 2; m <= n; ++m) {
        // Powers t = 2..m at column m.
        for (exponent_t t = 2; t <= m; ++t) {
            if (pw[t].empty()) {
                pw[t] = zero_dense(ring, n);
            }
            auto &slot = pw[t][m];
            for (exponent_t j = 1; j + t - 1 <= m; ++j) {
                if (b[j].is_zero()) {
                    continue;
                }
                const auto &prev = pw[t - 1][m - j];
                if (!prev.is_zero()) {
                    slot.add_product(b[j], prev);
                }
            }
        }
        RingElement acc = RingElement::zero(ring);
        for (const auto &[t, a] : higher) {
            if (t > m) {
                break;
            }
            acc.add_product(a, pw[t][m]);
        }
        b[m] = minus_a1_inv * acc;
        pw[1][m] = b[m];
    }
    return from_dense(ring, n, b);
}

} // namespace fpsmon
