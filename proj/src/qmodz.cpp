#include "thetagrp/qmodz.hpp"

#include <charconv>

#include "thetagrp/errors.hpp"
#include "thetagrp/integer.hpp"

namespace thetagrp {

QmodZ::QmodZ(std::int64_t num, std::int64_t den)
{
    require(den > 0, "QmodZ: denominator must be positive");
    num = mod64(num, den);
    std::int64_t g = gcd64(num, den);
    if (num == 0) {
        num_ = 0;
        den_ = 1;
    } else {
        num_ = num / g;
        den_ = den / g;
    }
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole)
{
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw DomainError("malformed fraction '" + whole + "'");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

QmodZ QmodZ::parse(const std::string& text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return QmodZ(parse_int(s, text), 1);
    std::int64_t num = parse_int(trim(s.substr(0, slash)), text);
    std::int64_t den = parse_int(trim(s.substr(slash + 1)), text);
    require(den > 0, "non-positive denominator in '" + text + "'");
    return QmodZ(num, den);
}

QmodZ QmodZ::operator+(const QmodZ& o) const
{
    std::int64_t g = gcd64(den_, o.den_);
    std::int64_t den = den_ / g * o.den_;
    __int128 num = static_cast<__int128>(num_) * (o.den_ / g) +
                   static_cast<__int128>(o.num_) * (den_ / g);
    return QmodZ(static_cast<std::int64_t>(num % den), den);
}

QmodZ QmodZ::operator-() const { return QmodZ(den_ - num_, den_); }

QmodZ QmodZ::operator-(const QmodZ& o) const { return *this + (-o); }

QmodZ QmodZ::operator*(std::int64_t k) const
{
    __int128 num = static_cast<__int128>(num_) * k;
    __int128 r = num % den_;
    return QmodZ(static_cast<std::int64_t>(r), den_);
}

std::string QmodZ::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const QmodZ& q) { return os << q.str(); }

} // namespace thetagrp
