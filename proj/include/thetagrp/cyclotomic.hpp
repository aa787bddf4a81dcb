#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thetagrp/integer.hpp"

namespace thetagrp {

/// Formal Z-combination sum_k c_k zeta^k of N-th roots of unity, exponents mod N.
class CyclotomicSum {
public:
    explicit CyclotomicSum(std::size_t N);

    std::size_t modulus() const { return coeffs_.size(); }
    const IntVector& coeffs() const { return coeffs_; }

    void add_root(std::int64_t k, const Int& c = 1);
    CyclotomicSum operator+(const CyclotomicSum& o) const;
    CyclotomicSum& operator+=(const CyclotomicSum& o);
    CyclotomicSum operator*(const CyclotomicSum& o) const;
    CyclotomicSum conj() const;

    /// The value as a rational integer if it lies in Z, by reduction modulo Phi_N.
    std::optional<Int> to_integer() const;

private:
    IntVector coeffs_;
};

/// Coefficients of the cyclotomic polynomial Phi_n, lowest degree first.
IntVector cyclotomic_polynomial(std::size_t n);

} // namespace thetagrp
