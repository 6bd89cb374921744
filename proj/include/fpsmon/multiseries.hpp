#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <fpsmon/expmonoid.hpp>
#include <fpsmon/ring.hpp>

namespace fpsmon
{

// Exponent vector u of x^u = x_1^{u_1} ... x_n^{u_n}.
using Monomial = std::vector<std::uint32_t>;

// |u| = u_1 + ... + u_n.
std::uint64_t norm(const Monomial &u);

// Graded lexicographic order: lower norm first, then larger leading exponents
// first, so x1^2 < x1*x2 < x2^2.
struct GradedLexLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

// Every nonzero monomial in n variables with norm exactly k, in graded lex order.
std::vector<Monomial> monomials_of_norm(std::size_t nvars, std::uint64_t k);

std::string format_monomial(const Monomial &u);

// An n-variable series without constant term, exact modulo monomials of
// total degree > D.
class MultiSeries
{
public:
    using coeff_map = std::map<Monomial, RingElement, GradedLexLess>;

    MultiSeries(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree);

    // x_i, 1-based.
    static MultiSeries variable(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree, std::size_t i);

    const RingDescriptor &ring() const noexcept
    {
        return m_ring;
    }
    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    std::uint32_t degree() const noexcept
    {
        return m_degree;
    }
    const coeff_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    RingElement coeff(const Monomial &u) const;
    // Monomials of norm above the degree bound are silently dropped; the zero
    // monomial and wrong-length vectors are rejected.
    void set_coeff(const Monomial &u, const RingElement &c);
    void add_to_coeff(const Monomial &u, const RingElement &c);

    MultiSeries truncate(std::uint32_t degree) const;

    friend bool operator==(const MultiSeries &, const MultiSeries &) = default;

private:
    RingDescriptor m_ring;
    std::size_t m_nvars;
    std::uint32_t m_degree;
    coeff_map m_terms;
};

MultiSeries add_nd(const MultiSeries &f, const MultiSeries &g);
MultiSeries scale_nd(const RingElement &c, const MultiSeries &f);
MultiSeries mul_nd(const MultiSeries &f, const MultiSeries &g);

// n components sharing ring, variable count and degree bound.
class SeriesTuple
{
public:
    explicit SeriesTuple(std::vector<MultiSeries> components);

    static SeriesTuple identity(const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree);

    const std::vector<MultiSeries> &components() const noexcept
    {
        return m_components;
    }
    const MultiSeries &operator[](std::size_t i) const
    {
        return m_components.at(i);
    }
    std::size_t size() const noexcept
    {
        return m_components.size();
    }
    const RingDescriptor &ring() const noexcept
    {
        return m_components.front().ring();
    }
    std::uint32_t degree() const noexcept
    {
        return m_components.front().degree();
    }

    friend bool operator==(const SeriesTuple &, const SeriesTuple &) = default;

private:
    std::vector<MultiSeries> m_components;
};

// Substitutes x_j -> g_j into every f_i, modulo total degree > min(D_F, D_G).
SeriesTuple compose_tuple(const SeriesTuple &f, const SeriesTuple &g);

// f(g_1, ..., g_n) for a single series.
MultiSeries substitute(const MultiSeries &f, const SeriesTuple &g);

// Monomial syntax x<i>[^e] joined by '*'; terms as in the univariate grammar.
// For nvars == 1 a bare 'x' means x1. Terms above the degree bound are dropped.
MultiSeries parse_multiseries(std::string_view text, const RingDescriptor &ring, std::size_t nvars,
                              std::uint32_t degree);
// Components separated by '|'; exactly nvars of them.
SeriesTuple parse_tuple(std::string_view text, const RingDescriptor &ring, std::size_t nvars, std::uint32_t degree);

std::string format_multiseries(const MultiSeries &f);
std::string format_tuple(const SeriesTuple &f);

// A set U of nonzero monomials of norm <= D, either the norm pullback
// {u : |u| in T} of an exponent set or an explicit finite list.
class SupportSetND
{
public:
    static SupportSetND from_norms(MembershipFn norms_in_t, std::size_t nvars, std::uint32_t degree);
    static SupportSetND from_explicit(std::vector<Monomial> members, std::size_t nvars, std::uint32_t degree);

    bool contains(const Monomial &u) const;

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    std::uint32_t degree() const noexcept
    {
        return m_degree;
    }
    bool is_explicit() const noexcept
    {
        return std::holds_alternative<std::map<Monomial, bool, GradedLexLess>>(m_members);
    }

    // Every member of norm <= degree(), graded lex order.
    std::vector<Monomial> enumerate() const;

private:
    SupportSetND(std::size_t nvars, std::uint32_t degree) : m_nvars(nvars), m_degree(degree) {}

    std::size_t m_nvars;
    std::uint32_t m_degree;
    std::variant<MembershipFn, std::map<Monomial, bool, GradedLexLess>> m_members;
};

SupportSetND support_from_T(const StrongMonoid &t, std::size_t nvars, std::uint32_t degree);

// Witness laid out as (u..., v...): u in U, |v| = |u|, v not in U.
Verdict is_norm_saturated(const SupportSetND &u);

// Witness (component index (1-based), monomial...).
Verdict is_supported_on_nd(const SeriesTuple &f, const SupportSetND &u);
Verdict is_supported_on_nd(const MultiSeries &f, const SupportSetND &u);

} // namespace fpsmon
