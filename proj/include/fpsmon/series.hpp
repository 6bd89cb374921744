#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fpsmon/expmonoid.hpp>
#include <fpsmon/ring.hpp>

namespace fpsmon
{

using exponent_t = std::uint32_t;

// A univariate series with zero constant term, known exactly modulo
// x^(N+1). Coefficients are stored sparsely and zeros are never stored.
class TruncatedSeries
{
public:
    using coeff_map = std::map<exponent_t, RingElement>;

    // The zero series.
    TruncatedSeries(const RingDescriptor &ring, exponent_t precision);

    static TruncatedSeries identity(const RingDescriptor &ring, exponent_t precision);
    static TruncatedSeries monomial(const RingElement &c, exponent_t e, exponent_t precision);

    const RingDescriptor &ring() const noexcept
    {
        return m_ring;
    }
    exponent_t precision() const noexcept
    {
        return m_precision;
    }
    const coeff_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    RingElement coeff(exponent_t e) const;
    // Sets (or clears, for a zero value) one coefficient. Exponents outside
    // 1..N are rejected.
    void set_coeff(exponent_t e, const RingElement &c);

    // Same class at a lower precision.
    TruncatedSeries truncate(exponent_t precision) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    RingDescriptor m_ring;
    exponent_t m_precision;
    coeff_map m_terms;
};

struct ParsedSeries {
    TruncatedSeries series;
    // Set when terms beyond the precision were dropped.
    bool truncated = false;
};

// Grammar: term (('+' | '-') term)*, term = [coeff ['*']] 'x' ['^' exp],
// with an optional leading sign. "0" denotes the zero series.
ParsedSeries parse_series(std::string_view text, const RingDescriptor &ring, exponent_t precision);
std::string format_series(const TruncatedSeries &f);

// Least exponent with a nonzero coefficient; nullopt stands for infinity.
std::optional<exponent_t> order(const TruncatedSeries &f);

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries negate(const TruncatedSeries &f);
TruncatedSeries scale(const RingElement &c, const TruncatedSeries &f);
TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g);

// f(g(x)) modulo x^(min(N_f, N_g) + 1).
TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g);

std::vector<exponent_t> support(const TruncatedSeries &f);
// Witness: the least exponent outside T.
Verdict is_supported_on(const TruncatedSeries &f, const MembershipFn &member);
Verdict is_supported_on(const TruncatedSeries &f, const StrongMonoid &t);

bool is_invertible(const TruncatedSeries &f);

// Compositional inverse by coefficient induction: b_1 = a_1^{-1} and for
// n >= 2, b_n = -a_1^{-1} [x^n] sum_{t >= 2} a_t (b_1 x + ... + b_{n-1} x^{n-1})^t.
// Throws not_invertible when a_1 is not a unit.
TruncatedSeries invert(const TruncatedSeries &f);

} // namespace fpsmon
