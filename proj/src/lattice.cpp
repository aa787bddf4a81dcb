#include "thetagrp/lattice.hpp"

#include <charconv>

#include "thetagrp/errors.hpp"

namespace thetagrp::lattice {

GramLattice::GramLattice(std::string name, IntMatrix gram)
    : name_(std::move(name)), gram_(std::move(gram))
{
    const std::size_t r = gram_.size();
    require(r > 0, "lattice: rank must be positive");
    for (std::size_t i = 0; i < r; ++i) {
        require(gram_[i].size() == r, "lattice: Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            require(gram_[i][j] == gram_[j][i], "lattice: Gram matrix is not symmetric");
    }
}

Int GramLattice::determinant() const
{
    // Fraction-free Bareiss elimination.
    const std::size_t n = rank();
    IntMatrix M = gram_;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && M[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

namespace {

void put_hyperbolic(IntMatrix& g, std::size_t at)
{
    g[at][at + 1] = 1;
    g[at + 1][at] = 1;
}

void check_rank(const GramLattice& L, const LatticeVector& v)
{
    require(v.size() == L.rank(), "vector length " + std::to_string(v.size()) +
                                      " does not match lattice rank " + std::to_string(L.rank()));
}

} // namespace

GramLattice lambda_kum(std::int64_t n)
{
    require(n >= 2, "lambda_kum: n must be >= 2");
    IntMatrix g(7, IntVector(7, 0));
    for (std::size_t i = 0; i < 6; i += 2) put_hyperbolic(g, i);
    g[6][6] = Int(-2) * (n + 1);
    return GramLattice("kum:" + std::to_string(n), std::move(g));
}

GramLattice lambda_og6()
{
    IntMatrix g(8, IntVector(8, 0));
    for (std::size_t i = 0; i < 6; i += 2) put_hyperbolic(g, i);
    g[6][6] = -2;
    g[7][7] = -2;
    return GramLattice("og6", std::move(g));
}

GramLattice lattice_by_name(const std::string& name)
{
    if (name == "og6") return lambda_og6();
    if (name.rfind("kum:", 0) == 0) {
        std::int64_t n = 0;
        const char* b = name.data() + 4;
        const char* e = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(b, e, n);
        require(ec == std::errc() && ptr == e && b != e, "malformed lattice name '" + name + "'");
        return lambda_kum(n);
    }
    throw DomainError("unknown lattice '" + name + "' (expected kum:<n> or og6)");
}

LatticeVector basis_vector(std::size_t rank, std::size_t i)
{
    LatticeVector v(rank, 0);
    v.at(i) = 1;
    return v;
}

Int bbf_pair(const GramLattice& L, const LatticeVector& v, const LatticeVector& w)
{
    check_rank(L, v);
    check_rank(L, w);
    Int s = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j) s += v[i] * L.entry(i, j) * w[j];
    }
    return s;
}

Int square(const GramLattice& L, const LatticeVector& v) { return bbf_pair(L, v, v); }

Int divisibility(const GramLattice& L, const LatticeVector& v)
{
    check_rank(L, v);
    Int g = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        Int row = 0;
        for (std::size_t j = 0; j < L.rank(); ++j) row += L.entry(i, j) * v[j];
        g = gcd(g, row);
    }
    return g;
}

bool is_primitive(const GramLattice& L, const LatticeVector& v)
{
    check_rank(L, v);
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    require(g != 0, "is_primitive: zero vector");
    return g == 1;
}

std::string to_string(Og6Class c)
{
    switch (c) {
    case Og6Class::I: return "I";
    case Og6Class::II: return "II";
    case Og6Class::III: return "III";
    }
    return "?";
}

Og6Class og6_class(const LatticeVector& v)
{
    static const GramLattice L = lambda_og6();
    require(is_primitive(L, v), "og6_class: vector is not primitive");
    const Int d = divisibility(L, v);
    if (d == 1) return Og6Class::I;
    ensure(d == 2, "og6_class: primitive vector of divisibility " + d.get_str());
    const Int r = mod(square(L, v), 8);
    if (r == 6) return Og6Class::II;
    ensure(r == 4, "og6_class: divisibility 2 with square " + square(L, v).get_str() +
                       " not congruent to -2 or -4 mod 8");
    return Og6Class::III;
}

bool og6_same_orbit(const LatticeVector& a, const LatticeVector& b)
{
    static const GramLattice L = lambda_og6();
    const Og6Class ca = og6_class(a);
    const Og6Class cb = og6_class(b);
    return ca == cb && square(L, a) == square(L, b);
}

GramLattice kum_ambient()
{
    IntMatrix g(8, IntVector(8, 0));
    for (std::size_t i = 0; i < 8; i += 2) put_hyperbolic(g, i);
    return GramLattice("ambient", std::move(g));
}

LatticeVector kum_vn(std::int64_t n)
{
    LatticeVector v(8, 0);
    v[6] = 1;
    v[7] = n + 1;
    return v;
}

LatticeVector embed_in_ambient(std::int64_t n, const LatticeVector& v)
{
    require(v.size() == 7, "embed_in_ambient: expected a Lambda_n vector of length 7");
    LatticeVector w(8, 0);
    for (std::size_t i = 0; i < 6; ++i) w[i] = v[i];
    w[6] = v[6];
    w[7] = -v[6] * (n + 1);
    return w;
}

OrbitInvariant kum_orbit_split(std::int64_t n, const LatticeVector& alpha)
{
    const GramLattice L = lambda_kum(n);
    check_rank(L, alpha);
    const Int N = n + 1;
    require(is_primitive(L, alpha), "kum_orbit_split: alpha is not primitive");
    const Int sq = square(L, alpha);
    require(sq == -2 * N, "kum_orbit_split: square " + sq.get_str() + " != -2(n+1)");
    const Int dv = divisibility(L, alpha);
    require(dv == 2 * N, "kum_orbit_split: divisibility " + dv.get_str() + " != 2(n+1)");

    OrbitInvariant out;
    out.x0 = alpha[6];
    out.beta.assign(6, 0);
    for (std::size_t i = 0; i < 6; ++i) {
        ensure(divides(2 * N, alpha[i]), "kum_orbit_split: U-part not divisible by 2(n+1)");
        out.beta[i] = alpha[i] / (2 * N);
    }
    const GramLattice U3("U3", [] {
        IntMatrix g(6, IntVector(6, 0));
        for (std::size_t i = 0; i < 6; i += 2) put_hyperbolic(g, i);
        return g;
    }());
    const Int beta_sq = square(U3, out.beta);
    ensure(2 * N * beta_sq == out.x0 * out.x0 - 1, "kum_orbit_split: 2(n+1) beta^2 != x0^2 - 1");

    // (x0-1)/2 and (x0+1)/2 are coprime with product (n+1) beta^2/2, so n+1 splits uniquely.
    std::size_t found = 0;
    for (std::int64_t p : divisors(n + 1)) {
        const Int P = p, Q = N / p;
        if (!divides(2 * P, out.x0 - 1) || !divides(2 * Q, out.x0 + 1)) continue;
        ++found;
        out.p = P;
        out.q = Q;
    }
    ensure(found == 1, "kum_orbit_split: expected a unique (p,q) splitting, found " +
                           std::to_string(found));

    // w = x0 f4 - beta in the ambient lattice.
    LatticeVector w(8, 0);
    for (std::size_t i = 0; i < 6; ++i) w[i] = -out.beta[i];
    w[7] = out.x0;
    const LatticeVector vn = kum_vn(n);
    const Int ce = (out.x0 - 1) / (2 * out.p), de = N / out.p;
    const Int cf = (out.x0 + 1) / (2 * out.q), df = N / out.q;
    out.e.assign(8, 0);
    out.f.assign(8, 0);
    for (std::size_t i = 0; i < 8; ++i) {
        out.e[i] = ce * vn[i] - de * w[i];
        out.f[i] = cf * vn[i] - df * w[i];
    }

    const GramLattice A = kum_ambient();
    ensure(square(A, out.e) == 0 && square(A, out.f) == 0, "kum_orbit_split: witnesses not isotropic");
    const LatticeVector target = embed_in_ambient(n, alpha);
    for (std::size_t i = 0; i < 8; ++i)
        ensure(out.p * out.e[i] + out.q * out.f[i] == target[i], "kum_orbit_split: alpha != p e + q f");
    return out;
}

} // namespace thetagrp::lattice
