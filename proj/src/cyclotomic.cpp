#include "thetagrp/cyclotomic.hpp"

#include "thetagrp/errors.hpp"

namespace thetagrp {

namespace {

// Exact division of polynomials over Z by a monic divisor.
IntVector poly_divexact(IntVector num, const IntVector& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() <= dn) return {0};
    IntVector q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Int c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i) ensure(num[i] == 0, "cyclotomic: inexact division");
    return q;
}

} // namespace

IntVector cyclotomic_polynomial(std::size_t n)
{
    require(n >= 1, "cyclotomic_polynomial: n must be positive");
    // X^n - 1 divided by Phi_d for every proper divisor d.
    IntVector p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicSum::CyclotomicSum(std::size_t N) : coeffs_(N, 0)
{
    require(N >= 1, "CyclotomicSum: modulus must be positive");
}

void CyclotomicSum::add_root(std::int64_t k, const Int& c)
{
    const auto N = static_cast<std::int64_t>(coeffs_.size());
    coeffs_[static_cast<std::size_t>(mod64(k, N))] += c;
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& o) const
{
    CyclotomicSum r = *this;
    r += o;
    return r;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o)
{
    require(o.modulus() == modulus(), "CyclotomicSum: modulus mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& o) const
{
    require(o.modulus() == modulus(), "CyclotomicSum: modulus mismatch");
    const std::size_t N = modulus();
    CyclotomicSum r(N);
    for (std::size_t i = 0; i < N; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < N; ++j)
            if (o.coeffs_[j] != 0) r.coeffs_[(i + j) % N] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

CyclotomicSum CyclotomicSum::conj() const
{
    const std::size_t N = modulus();
    CyclotomicSum r(N);
    for (std::size_t i = 0; i < N; ++i) r.coeffs_[(N - i) % N] = coeffs_[i];
    return r;
}

std::optional<Int> CyclotomicSum::to_integer() const
{
    // Reduce sum c_k X^k modulo the monic Phi_N; the value is rational iff the
    // remainder is constant.
    const IntVector phi = cyclotomic_polynomial(modulus());
    const std::size_t deg = phi.size() - 1;
    IntVector r = coeffs_;
    for (std::size_t i = r.size(); i-- > deg;) {
        const Int c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 1; i < std::min(deg, r.size()); ++i)
        if (r[i] != 0) return std::nullopt;
    return r[0];
}

} // namespace thetagrp
