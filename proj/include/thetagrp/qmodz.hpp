#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace thetagrp {

/// An element of Q/Z, stored as a reduced fraction num/den with 0 <= num < den.
/// Models the root of unity exp(2*pi*i*num/den) additively.
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(std::int64_t num, std::int64_t den);

    static QmodZ parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    // Order of the element in Q/Z (equals den).
    std::int64_t order() const { return den_; }

    QmodZ operator+(const QmodZ& o) const;
    QmodZ operator-(const QmodZ& o) const;
    QmodZ operator-() const;
    QmodZ operator*(std::int64_t k) const;
    QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }
    QmodZ& operator-=(const QmodZ& o) { return *this = *this - o; }

    bool operator==(const QmodZ& o) const = default;

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline QmodZ operator*(std::int64_t k, const QmodZ& q) { return q * k; }

std::ostream& operator<<(std::ostream& os, const QmodZ& q);

} // namespace thetagrp
