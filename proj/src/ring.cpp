#include <fpsmon/errors.hpp>
#include <fpsmon/ring.hpp>

#include <cctype>
#include <string>

namespace fpsmon
{

namespace
{

bool is_integer_literal(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

// Largest modulus accepted; keeps products of two residues inside 128 bits
// and makes the descriptor trivially copyable.
constexpr std::uint64_t max_modulus = std::uint64_t(1) << 62;

} // namespace

RingDescriptor RingDescriptor::integers_mod(std::uint64_t m)
{
    if (m < 2) {
        throw usage_error("modulus must be at least 2, got " + std::to_string(m));
    }
    if (m > max_modulus) {
        throw usage_error("modulus too large (limit 2^62)");
    }
    return RingDescriptor(ring_kind::integers_mod, m);
}

RingDescriptor RingDescriptor::parse(std::string_view text)
{
    if (text == "z" || text == "Z") {
        return integers();
    }
    if (text == "q" || text == "Q") {
        return rationals();
    }
    constexpr std::string_view prefix = "zmod:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        if (digits.empty() || !is_integer_literal(digits) || digits[0] == '-' || digits.size() > 19) {
            throw usage_error("invalid modulus in ring '" + std::string(text) + "'; expected zmod:<m> with m >= 2");
        }
        return integers_mod(std::stoull(std::string(digits)));
    }
    throw usage_error("unknown ring '" + std::string(text) + "'; expected z | zmod:<m> | q");
}

bool RingDescriptor::is_integral_domain() const
{
    if (m_kind != ring_kind::integers_mod) {
        return true;
    }
    if (m_modulus < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= m_modulus / d; ++d) {
        if (m_modulus % d == 0) {
            return false;
        }
    }
    return true;
}

std::string RingDescriptor::to_string() const
{
    switch (m_kind) {
        case ring_kind::integers:
            return "z";
        case ring_kind::rationals:
            return "q";
        case ring_kind::integers_mod:
            return "zmod:" + std::to_string(m_modulus);
    }
    return "?";
}

RingElement::RingElement(const RingDescriptor &ring, long v) : m_ring(ring), m_value(v)
{
    canonicalize();
}

RingElement::RingElement(const RingDescriptor &ring, const mpz_class &v) : m_ring(ring), m_value(v)
{
    canonicalize();
}

RingElement::RingElement(const RingDescriptor &ring, const mpq_class &v) : m_ring(ring), m_value(v)
{
    m_value.canonicalize();
    if (ring.kind() != ring_kind::rationals && m_value.get_den() != 1) {
        if (ring.kind() == ring_kind::integers) {
            throw usage_error("non-integral value " + m_value.get_str() + " in ring z");
        }
        // Over Z/m a fraction a/b is a * b^{-1} when b is a unit.
        mpz_class den = m_value.get_den();
        mpz_class m(std::to_string(ring.modulus()));
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
            throw usage_error("denominator " + den.get_str() + " is not a unit in " + ring.to_string());
        }
        m_value = mpq_class(mpz_class(m_value.get_num() * inv));
    }
    canonicalize();
}

RingElement RingElement::parse(std::string_view text, const RingDescriptor &ring)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) {
            throw parse_error("malformed coefficient '" + std::string(text) + "'", 0);
        }
        return RingElement(ring, mpz_class(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
        throw parse_error("malformed rational '" + std::string(text) + "'", 0);
    }
    mpz_class d(std::string{den});
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'", slash + 1);
    }
    if (ring.kind() == ring_kind::integers) {
        throw usage_error("rational literal '" + std::string(text) + "' requires --ring q");
    }
    return RingElement(ring, mpq_class(mpz_class(std::string{num}), d));
}

std::string RingElement::to_string() const
{
    return m_value.get_str();
}

void RingElement::canonicalize()
{
    if (m_ring.kind() != ring_kind::integers_mod) {
        return;
    }
    mpz_ptr num = mpq_numref(m_value.get_mpq_t());
    mpz_fdiv_r_ui(num, num, m_ring.modulus());
}

void RingElement::require_same_ring(const RingElement &other) const
{
    if (!(m_ring == other.m_ring)) {
        throw usage_error("ring mismatch: " + m_ring.to_string() + " vs " + other.m_ring.to_string());
    }
}

RingElement RingElement::operator-() const
{
    RingElement r(m_ring, -m_value, trusted_tag{});
    r.canonicalize();
    return r;
}

RingElement &RingElement::operator+=(const RingElement &other)
{
    require_same_ring(other);
    if (m_ring.kind() == ring_kind::rationals) {
        m_value += other.m_value;
    } else {
        mpz_add(mpq_numref(m_value.get_mpq_t()), mpq_numref(m_value.get_mpq_t()),
                mpq_numref(other.m_value.get_mpq_t()));
        canonicalize();
    }
    return *this;
}

RingElement &RingElement::operator-=(const RingElement &other)
{
    require_same_ring(other);
    if (m_ring.kind() == ring_kind::rationals) {
        m_value -= other.m_value;
    } else {
        mpz_sub(mpq_numref(m_value.get_mpq_t()), mpq_numref(m_value.get_mpq_t()),
                mpq_numref(other.m_value.get_mpq_t()));
        canonicalize();
    }
    return *this;
}

RingElement &RingElement::operator*=(const RingElement &other)
{
    require_same_ring(other);
    if (m_ring.kind() == ring_kind::rationals) {
        m_value *= other.m_value;
    } else {
        mpz_mul(mpq_numref(m_value.get_mpq_t()), mpq_numref(m_value.get_mpq_t()),
                mpq_numref(other.m_value.get_mpq_t()));
        canonicalize();
    }
    return *this;
}

void RingElement::add_product(const RingElement &b, const RingElement &c)
{
    require_same_ring(b);
    require_same_ring(c);
    if (m_ring.kind() == ring_kind::rationals) {
        m_value += b.m_value * c.m_value;
    } else {
        mpz_addmul(mpq_numref(m_value.get_mpq_t()), mpq_numref(b.m_value.get_mpq_t()),
                   mpq_numref(c.m_value.get_mpq_t()));
        canonicalize();
    }
}

RingElement ring_arith(ring_op op, const RingElement &a, const RingElement &b)
{
    switch (op) {
        case ring_op::add:
            return a + b;
        case ring_op::sub:
            return a - b;
        case ring_op::mul:
            return a * b;
        case ring_op::neg:
            return -a;
    }
    throw usage_error("unknown ring operation");
}

std::optional<RingElement> inverse_unit(const RingElement &a)
{
    const auto &ring = a.ring();
    switch (ring.kind()) {
        case ring_kind::integers:
            if (a.value() == 1 || a.value() == -1) {
                return a;
            }
            return std::nullopt;
        case ring_kind::rationals:
            if (a.is_zero()) {
                return std::nullopt;
            }
            return RingElement(ring, mpq_class(1) / a.value());
        case ring_kind::integers_mod: {
            mpz_class m(std::to_string(ring.modulus()));
            mpz_class inv;
            mpz_class v = a.value().get_num();
            if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) {
                return std::nullopt;
            }
            return RingElement(ring, inv);
        }
    }
    return std::nullopt;
}

} // namespace fpsmon
