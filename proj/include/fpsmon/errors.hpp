#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpsmon
{

// Raised for malformed requests: mismatched rings, out-of-domain
// arguments, bad flags. The CLI maps it to exit code 2.
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Compositional (or multiplicative) inverse requested for a non-unit.
class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class parse_error : public usage_error
{
public:
    parse_error(const std::string &msg, std::size_t pos)
        : usage_error(msg + " (at position " + std::to_string(pos) + ")"), m_pos(pos)
    {
    }

    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

class constant_term_error : public parse_error
{
public:
    explicit constant_term_error(std::size_t pos)
        : parse_error("constant term not allowed: series must lie in x R[[x]]", pos)
    {
    }
};

} // namespace fpsmon
