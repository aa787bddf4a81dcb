#include "thetagrp/finabgrp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "thetagrp/errors.hpp"
#include "thetagrp/smith.hpp"

namespace thetagrp::group {

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders))
{
    for (std::int64_t o : orders_) require(o >= 2, "group: every cyclic order must be >= 2");
}

FinAbGroup FinAbGroup::uniform(std::int64_t m, std::size_t k)
{
    return FinAbGroup(std::vector<std::int64_t>(k, m));
}

std::uint64_t FinAbGroup::size() const
{
    std::uint64_t s = 1;
    for (std::int64_t o : orders_) {
        require(s <= UINT64_MAX / static_cast<std::uint64_t>(o), "group: order overflows 64 bits");
        s *= static_cast<std::uint64_t>(o);
    }
    return s;
}

std::int64_t FinAbGroup::exponent() const
{
    std::int64_t e = 1;
    for (std::int64_t o : orders_) e = lcm64(e, o);
    return e;
}

bool FinAbGroup::has_uniform_exponent() const
{
    return std::all_of(orders_.begin(), orders_.end(),
                       [&](std::int64_t o) { return o == orders_.front(); });
}

GroupElement FinAbGroup::generator(std::size_t i) const
{
    require(i < orders_.size(), "group: generator index out of range");
    GroupElement g = zero();
    g[i] = 1;
    return g;
}

GroupElement FinAbGroup::reduce(GroupElement g) const
{
    require(g.size() == orders_.size(), "group: element has wrong length");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod64(g[i], orders_[i]);
    return g;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const
{
    check(a);
    check(b);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod64(a[i] + b[i], orders_[i]);
    return c;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const
{
    check(a);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod64(-a[i], orders_[i]);
    return c;
}

GroupElement FinAbGroup::scale(const GroupElement& a, std::int64_t k) const
{
    check(a);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = static_cast<std::int64_t>(
            (static_cast<__int128>(a[i]) * mod64(k, orders_[i])) % orders_[i]);
    return c;
}

std::int64_t FinAbGroup::element_order(const GroupElement& a) const
{
    check(a);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        o = lcm64(o, orders_[i] / gcd64(a[i], orders_[i]));
    return o;
}

bool FinAbGroup::contains(const GroupElement& a) const
{
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders_[i]) return false;
    return true;
}

void FinAbGroup::check(const GroupElement& a) const
{
    require(contains(a), "group: element does not belong to the group");
}

GroupElement FinAbGroup::element_at(std::uint64_t index) const
{
    GroupElement g(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto o = static_cast<std::uint64_t>(orders_[i]);
        g[i] = static_cast<std::int64_t>(index % o);
        index /= o;
    }
    return g;
}

std::uint64_t FinAbGroup::index_of(const GroupElement& a) const
{
    std::uint64_t idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(a[i]);
    return idx;
}

// ---------------------------------------------------------- AbGroupStructure

bool is_divisor_chain(const std::vector<std::int64_t>& factors)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) return false;
        if (i > 0 && factors[i] % factors[i - 1] != 0) return false;
    }
    return true;
}

std::uint64_t AbGroupStructure::order() const
{
    std::uint64_t s = 1;
    for (std::int64_t d : invariant_factors) s *= static_cast<std::uint64_t>(d);
    return s;
}

std::string AbGroupStructure::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? "," : "") << invariant_factors[i];
    os << ']';
    return os.str();
}

AbGroupStructure AbGroupStructure::from_cyclic_orders(const std::vector<std::int64_t>& orders)
{
    // Split into prime powers, then stack the largest powers of each prime.
    std::map<std::int64_t, std::vector<std::int64_t>> powers;
    for (std::int64_t o : orders) {
        require(o >= 1, "cyclic orders must be positive");
        if (o == 1) continue;
        for (auto [p, e] : factorize(o)) {
            std::int64_t pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            powers[p].push_back(pe);
        }
    }
    std::size_t len = 0;
    for (auto& [p, v] : powers) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    std::vector<std::int64_t> out(len, 1);
    for (auto& [p, v] : powers)
        for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
    AbGroupStructure s{out};
    ensure(is_divisor_chain(s.invariant_factors), "from_cyclic_orders: not a divisor chain");
    return s;
}

AbGroupStructure AbGroupStructure::from_invariants(const std::vector<Int>& factors)
{
    std::vector<std::int64_t> v;
    for (const Int& f : factors) {
        require(f.fits_slong_p(), "invariant factor does not fit in 64 bits");
        v.push_back(f.get_si());
    }
    return from_cyclic_orders(v);
}

// ------------------------------------------------------------------- Pairing

Pairing::Pairing(FinAbGroup group, std::vector<std::vector<QmodZ>> matrix)
    : group_(std::move(group)), matrix_(std::move(matrix))
{
    const std::size_t k = group_.rank();
    require(matrix_.size() == k, "pairing: matrix size does not match group rank");
    for (std::size_t i = 0; i < k; ++i) {
        require(matrix_[i].size() == k, "pairing: matrix is not square");
        require(matrix_[i][i].is_zero(), "pairing: not skew (nonzero diagonal)");
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t g = gcd64(group_.order(i), group_.order(j));
            require(g % matrix_[i][j].den() == 0,
                    "pairing: value " + matrix_[i][j].str() + " is not well defined on generators " +
                        std::to_string(i) + "," + std::to_string(j));
            require(matrix_[j][i] == -matrix_[i][j], "pairing: not skew at " + std::to_string(i) +
                                                         "," + std::to_string(j));
        }
    }
}

Pairing Pairing::zero(const FinAbGroup& group)
{
    return Pairing(group, std::vector<std::vector<QmodZ>>(
                              group.rank(), std::vector<QmodZ>(group.rank())));
}

QmodZ eval_pairing(const Pairing& P, const GroupElement& a, const GroupElement& b)
{
    P.group().check(a);
    P.group().check(b);
    QmodZ s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += P.value(i, j) * (a[i] * b[j]);
    }
    return s;
}

IntMatrix e_matrix(const Pairing& P)
{
    const auto& G = P.group();
    const std::size_t k = G.rank();
    IntMatrix M(k, IntVector(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            // E(gen_j)(gen_i) = e(gen_j, gen_i) = c / orders[i]
            const QmodZ& v = P.value(j, i);
            M[i][j] = v.num() * (G.order(i) / v.den());
        }
    return M;
}

namespace {

// [M | diag(orders)]
IntMatrix augmented(const Pairing& P)
{
    const auto& G = P.group();
    const std::size_t k = G.rank();
    IntMatrix M = e_matrix(P);
    for (std::size_t i = 0; i < k; ++i) {
        M[i].resize(2 * k, 0);
        M[i][k + i] = G.order(i);
    }
    return M;
}

// Solves B X = D for integer X, B square nonsingular, by exact rational elimination.
IntMatrix solve_integral(const IntMatrix& B, const IntMatrix& D)
{
    const std::size_t n = B.size(), m = D[0].size();
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n + m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A[i][j] = B[i][j];
        for (std::size_t j = 0; j < m; ++j) A[i][n + j] = D[i][j];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && A[r][c] == 0) ++r;
        ensure(r < n, "solve_integral: singular lattice basis");
        std::swap(A[r], A[c]);
        const mpq_class piv = A[c][c];
        for (auto& x : A[c]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0) continue;
            const mpq_class f = A[i][c];
            for (std::size_t j = c; j < n + m; ++j) A[i][j] -= f * A[c][j];
        }
    }
    IntMatrix X(n, IntVector(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            A[i][n + j].canonicalize();
            ensure(A[i][n + j].get_den() == 1, "solve_integral: non-integral solution");
            X[i][j] = A[i][n + j].get_num();
        }
    return X;
}

} // namespace

AbGroupStructure pairing_cokernel(const Pairing& P)
{
    if (P.group().rank() == 0) return {};
    return AbGroupStructure::from_invariants(torsion_invariants(augmented(P)));
}

AbGroupStructure pairing_radical(const Pairing& P)
{
    const auto& G = P.group();
    const std::size_t k = G.rank();
    if (k == 0) return {};

    // ker[M | D] projects injectively onto L = {a : M a in D Z^k}; ker(E) = L / D Z^k.
    const SmithForm F = smith_normal_form(augmented(P));
    ensure(F.rank == k, "pairing_radical: augmented matrix must have full row rank");
    IntMatrix B(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) B[i][c] = F.V[i][k + c];

    IntMatrix D(k, IntVector(k, 0));
    for (std::size_t i = 0; i < k; ++i) D[i][i] = G.order(i);
    return AbGroupStructure::from_invariants(torsion_invariants(solve_integral(B, D)));
}

bool is_nondegenerate(const Pairing& P) { return pairing_cokernel(P).is_trivial(); }

AbGroupStructure brute_cokernel(const Pairing& P, std::uint64_t bound)
{
    const auto& G = P.group();
    const std::uint64_t size = G.size();
    require(size <= bound, "brute_cokernel: group of order " + std::to_string(size) +
                               " exceeds bound " + std::to_string(bound));
    const std::size_t k = G.rank();
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(G.generator(i));

    // The dual has the same shape as G: chi <-> (c_i) with chi(gen_i) = c_i / orders[i].
    std::vector<char> in_image(size, 0);
    std::uint64_t image_size = 0;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        const GroupElement g = G.element_at(idx);
        GroupElement chi(k);
        for (std::size_t i = 0; i < k; ++i) {
            const QmodZ v = eval_pairing(P, g, gens[i]);
            chi[i] = v.num() * (G.order(i) / v.den());
        }
        const std::uint64_t c = G.index_of(chi);
        if (!in_image[c]) {
            in_image[c] = 1;
            ++image_size;
        }
    }

    // Orders of the cosets chi + im(E), counted over all chi.
    std::map<std::int64_t, std::uint64_t> order_count;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        const GroupElement chi = G.element_at(idx);
        GroupElement acc = chi;
        std::int64_t ord = 1;
        while (!in_image[G.index_of(acc)]) {
            acc = G.add(acc, chi);
            ++ord;
        }
        ++order_count[ord];
    }
    const std::uint64_t quotient_size = size / image_size;
    ensure(quotient_size * image_size == size, "brute_cokernel: image is not a subgroup");

    // For each prime p, log_p #{x : p^j x = 0} = sum_i min(j, e_i) recovers the p-exponents.
    std::int64_t expo = 1;
    for (auto& [o, c] : order_count) expo = lcm64(expo, o);
    std::vector<std::int64_t> cyclic;
    if (expo > 1) {
        for (auto [p, emax] : factorize(expo)) {
            std::vector<int> rank_at(emax + 1, 0);
            std::int64_t pj = 1;
            for (int j = 1; j <= emax; ++j) {
                pj *= p;
                // cosets whose order divides p^j, each counted once
                std::uint64_t killed = 0;
                for (auto& [o, c] : order_count)
                    if (pj % o == 0) killed += c;
                killed /= image_size;
                int r = 0;
                for (std::uint64_t t = killed; t > 1; t /= static_cast<std::uint64_t>(p)) ++r;
                rank_at[j] = r;
            }
            for (int j = 1; j <= emax; ++j) {
                const int count_ge_j = rank_at[j] - rank_at[j - 1];
                const int count_ge_next = j < emax ? rank_at[j + 1] - rank_at[j] : 0;
                std::int64_t pe = 1;
                for (int t = 0; t < j; ++t) pe *= p;
                for (int t = 0; t < count_ge_j - count_ge_next; ++t) cyclic.push_back(pe);
            }
        }
    }
    AbGroupStructure s = AbGroupStructure::from_cyclic_orders(cyclic);
    ensure(s.order() == quotient_size, "brute_cokernel: reconstructed order mismatch");
    return s;
}

// ---------------------------------------------------------- model pairings

Pairing standard_kum_pairing(std::int64_t n, std::int64_t b1, std::int64_t b2)
{
    require(n >= 2, "standard_kum_pairing: n must be >= 2");
    const std::int64_t N = n + 1;
    require(b1 > 0 && N % b1 == 0, "standard_kum_pairing: b1 must divide n+1");
    require(b2 > 0 && N % b2 == 0, "standard_kum_pairing: b2 must divide n+1");
    std::vector<std::vector<QmodZ>> m(4, std::vector<QmodZ>(4));
    m[0][1] = QmodZ(b1, N);
    m[1][0] = -m[0][1];
    m[2][3] = QmodZ(b2, N);
    m[3][2] = -m[2][3];
    return Pairing(FinAbGroup::uniform(N, 4), std::move(m));
}

std::string to_string(Og6Case c)
{
    switch (c) {
    case Og6Case::DIV1_NOT4: return "DIV1_NOT4";
    case Og6Case::DIV1_DIV4: return "DIV1_DIV4";
    case Og6Case::DIV2: return "DIV2";
    }
    return "?";
}

Pairing symplectic_z2(std::size_t k)
{
    std::vector<std::vector<QmodZ>> m(2 * k, std::vector<QmodZ>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        m[2 * i][2 * i + 1] = QmodZ(1, 2);
        m[2 * i + 1][2 * i] = QmodZ(1, 2);
    }
    return Pairing(FinAbGroup::uniform(2, 2 * k), std::move(m));
}

Pairing standard_og6_pairing(Og6Case c)
{
    // Generators 0..3 span J[2], 4..7 span J^[2]; each factor carries the
    // symplectic form on pairs (0,1), (2,3) resp. (4,5), (6,7).
    std::vector<std::vector<QmodZ>> m(8, std::vector<QmodZ>(8));
    auto symplectic_on = [&](std::size_t base) {
        for (std::size_t i = base; i < base + 4; i += 2) {
            m[i][i + 1] = QmodZ(1, 2);
            m[i + 1][i] = QmodZ(1, 2);
        }
    };
    switch (c) {
    case Og6Case::DIV1_NOT4:
        symplectic_on(0);
        symplectic_on(4);
        break;
    case Og6Case::DIV1_DIV4:
        symplectic_on(0);
        break;
    case Og6Case::DIV2:
        break;
    }
    return Pairing(FinAbGroup::uniform(2, 8), std::move(m));
}

Pairing tensor_pairing(const Pairing& P1, const Pairing& P2)
{
    require(P1.group() == P2.group(), "tensor_pairing: pairings live on different groups");
    auto m = P1.matrix();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += P2.value(i, j);
    return Pairing(P1.group(), std::move(m));
}

// -------------------------------------------------------- symplectic basis

std::uint64_t generated_subgroup_size(const FinAbGroup& G, const std::vector<GroupElement>& gens)
{
    const std::uint64_t size = G.size();
    std::vector<char> seen(size, 0);
    std::vector<GroupElement> frontier{G.zero()};
    seen[G.index_of(G.zero())] = 1;
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        GroupElement g = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& h : gens) {
            GroupElement s = G.add(g, h);
            const std::uint64_t idx = G.index_of(s);
            if (seen[idx]) continue;
            seen[idx] = 1;
            ++count;
            frontier.push_back(std::move(s));
        }
    }
    return count;
}

namespace {

std::int64_t pvaluation_power(std::int64_t x, std::int64_t p)
{
    std::int64_t pe = 1;
    while (x % p == 0) {
        x /= p;
        pe *= p;
    }
    return pe;
}

// Sum over primes of (cofactor * candidate maximizing the p-part of order(candidate)).
template <class OrderFn>
GroupElement max_order_combination(const FinAbGroup& G, const std::vector<GroupElement>& cands,
                                   OrderFn order_of)
{
    std::int64_t total = 1;
    std::vector<std::int64_t> orders;
    for (const auto& c : cands) {
        orders.push_back(order_of(c));
        total = lcm64(total, orders.back());
    }
    GroupElement out = G.zero();
    if (total == 1) return out;
    for (auto [p, e] : factorize(total)) {
        std::size_t best = 0;
        std::int64_t best_pe = 0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const std::int64_t pe = pvaluation_power(orders[i], p);
            if (pe > best_pe) {
                best_pe = pe;
                best = i;
            }
        }
        out = G.add(out, G.scale(cands[best], orders[best] / best_pe));
    }
    return out;
}

} // namespace

SymplecticBasis symplectic_basis(const Pairing& P)
{
    require(is_nondegenerate(P), "symplectic_basis: pairing is degenerate");
    const auto& G = P.group();
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < G.rank(); ++i) gens.push_back(G.generator(i));

    SymplecticBasis out;
    for (;;) {
        // The pairing stays nondegenerate on the span W of gens, so the maximal
        // order of e(x, .) on W equals the exponent of W.
        const GroupElement x =
            max_order_combination(G, gens, [&](const GroupElement& g) { return G.element_order(g); });
        const std::int64_t d = G.element_order(x);
        if (d == 1) break;
        GroupElement y = max_order_combination(
            G, gens, [&](const GroupElement& g) { return eval_pairing(P, x, g).order(); });
        const QmodZ exy = eval_pairing(P, x, y);
        ensure(exy.order() == d, "symplectic_basis: no partner of full order");
        // Normalize e(x, y) = 1/d.
        const std::int64_t u = exy.num() * (d / exy.den());
        y = G.scale(y, inverse_mod64(u, d));
        ensure(eval_pairing(P, x, y) == QmodZ(1, d), "symplectic_basis: normalization failed");

        // Project onto {x, y}^perp: z - e(z,y) d x + e(z,x) d y.
        std::vector<GroupElement> next;
        for (const auto& z : gens) {
            const QmodZ zy = eval_pairing(P, z, y);
            const QmodZ zx = eval_pairing(P, z, x);
            ensure(d % zy.den() == 0 && d % zx.den() == 0, "symplectic_basis: value order exceeds d");
            const std::int64_t a = zy.num() * (d / zy.den());
            const std::int64_t b = zx.num() * (d / zx.den());
            GroupElement w = G.add(G.add(z, G.scale(x, -a)), G.scale(y, b));
            ensure(eval_pairing(P, w, x).is_zero() && eval_pairing(P, w, y).is_zero(),
                   "symplectic_basis: projection not orthogonal");
            if (w != G.zero()) next.push_back(std::move(w));
        }
        out.pairs.emplace_back(x, y);
        out.d.push_back(d);
        gens = std::move(next);
        if (gens.empty()) break;
    }
    // Ascending d, keeping discovery order among equal d.
    std::vector<std::size_t> idx(out.d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return out.d[a] < out.d[b]; });
    SymplecticBasis sorted;
    for (std::size_t i : idx) {
        sorted.pairs.push_back(out.pairs[i]);
        sorted.d.push_back(out.d[i]);
    }
    return sorted;
}

} // namespace thetagrp::group
