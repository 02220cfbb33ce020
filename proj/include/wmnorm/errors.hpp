#pragma once

#include <stdexcept>
#include <string>

namespace wmnorm {

/// Raised when an operation is called outside the domain where it is defined.
class DomainError : public std::domain_error
{
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline void require(bool condition, const char* message)
{
    if (!condition)
        throw DomainError(message);
}

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw DomainError(message);
}

} // namespace detail
} // namespace wmnorm
