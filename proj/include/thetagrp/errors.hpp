#pragma once

#include <stdexcept>
#include <string>

namespace thetagrp {

// Input violates an operation's precondition (bad shape, congruence, range).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical guarantee failed to hold; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg)
{
    if (!cond) throw InternalError(msg);
}

} // namespace thetagrp
