#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fpsmon
{

enum class ring_kind : std::uint8_t { integers, integers_mod, rationals };

// Selects one of the supported commutative coefficient rings.
// The modulus is meaningful only for integers_mod.
class RingDescriptor
{
public:
    static RingDescriptor integers() noexcept
    {
        return RingDescriptor(ring_kind::integers, 0);
    }
    static RingDescriptor integers_mod(std::uint64_t m);
    static RingDescriptor rationals() noexcept
    {
        return RingDescriptor(ring_kind::rationals, 0);
    }

    // Accepts "z", "q" and "zmod:<m>".
    static RingDescriptor parse(std::string_view text);

    ring_kind kind() const noexcept
    {
        return m_kind;
    }
    std::uint64_t modulus() const noexcept
    {
        return m_modulus;
    }
    bool is_integral_domain() const;

    std::string to_string() const;

    friend bool operator==(const RingDescriptor &, const RingDescriptor &) = default;

private:
    RingDescriptor(ring_kind k, std::uint64_t m) noexcept : m_kind(k), m_modulus(m) {}

    ring_kind m_kind;
    std::uint64_t m_modulus;
};

// An element of a coefficient ring, kept in canonical form:
// Z/m values in [0, m), rationals in lowest terms with positive denominator.
// Integers (and residues) are stored as rationals with denominator 1.
class RingElement
{
public:
    RingElement(const RingDescriptor &ring, long v);
    RingElement(const RingDescriptor &ring, const mpz_class &v);
    RingElement(const RingDescriptor &ring, const mpq_class &v);

    static RingElement zero(const RingDescriptor &ring)
    {
        return RingElement(ring, 0L);
    }
    static RingElement one(const RingDescriptor &ring)
    {
        return RingElement(ring, 1L);
    }
    // Integers `-?[0-9]+`, and `a/b` over Q.
    static RingElement parse(std::string_view text, const RingDescriptor &ring);

    const RingDescriptor &ring() const noexcept
    {
        return m_ring;
    }
    const mpq_class &value() const noexcept
    {
        return m_value;
    }
    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_one() const
    {
        return m_value == 1;
    }

    std::string to_string() const;

    RingElement operator-() const;
    RingElement &operator+=(const RingElement &other);
    RingElement &operator-=(const RingElement &other);
    RingElement &operator*=(const RingElement &other);

    friend RingElement operator+(RingElement a, const RingElement &b)
    {
        return a += b;
    }
    friend RingElement operator-(RingElement a, const RingElement &b)
    {
        return a -= b;
    }
    friend RingElement operator*(RingElement a, const RingElement &b)
    {
        return a *= b;
    }
    friend bool operator==(const RingElement &a, const RingElement &b)
    {
        return a.m_ring == b.m_ring && a.m_value == b.m_value;
    }

    // Fused a += b * c, avoiding a temporary in the convolution kernels.
    void add_product(const RingElement &b, const RingElement &c);

private:
    struct trusted_tag {};
    RingElement(const RingDescriptor &ring, mpq_class v, trusted_tag) : m_ring(ring), m_value(std::move(v)) {}

    void canonicalize();
    void require_same_ring(const RingElement &other) const;

    RingDescriptor m_ring;
    mpq_class m_value;
};

enum class ring_op { add, sub, mul, neg };

// Generic entry point mirroring the ring_arith operation; `b` is ignored for neg.
RingElement ring_arith(ring_op op, const RingElement &a, const RingElement &b);

// Multiplicative inverse, or nullopt when `a` is not a unit.
std::optional<RingElement> inverse_unit(const RingElement &a);

} // namespace fpsmon
