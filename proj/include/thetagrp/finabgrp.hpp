#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetagrp/integer.hpp"
#include "thetagrp/qmodz.hpp"

namespace thetagrp::group {

using GroupElement = std::vector<std::int64_t>;

/// Product of cyclic groups Z/orders[0] x ... x Z/orders[k-1], every order >= 2.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<std::int64_t> orders);

    /// (Z/m)^k
    static FinAbGroup uniform(std::int64_t m, std::size_t k);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::int64_t order(std::size_t i) const { return orders_[i]; }

    /// Number of elements; throws if it overflows 64 bits.
    std::uint64_t size() const;
    std::int64_t exponent() const;
    bool has_uniform_exponent() const;

    GroupElement zero() const { return GroupElement(orders_.size(), 0); }
    GroupElement generator(std::size_t i) const;
    GroupElement reduce(GroupElement g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, std::int64_t k) const;
    std::int64_t element_order(const GroupElement& a) const;

    bool contains(const GroupElement& a) const;
    void check(const GroupElement& a) const;

    /// Mixed-radix indexing with coordinate 0 fastest.
    GroupElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const GroupElement& a) const;

    bool operator==(const FinAbGroup& o) const = default;

private:
    std::vector<std::int64_t> orders_;
};

/// Invariant-factor description d1 | d2 | ... | dk, each >= 2; empty = trivial.
struct AbGroupStructure {
    std::vector<std::int64_t> invariant_factors;

    bool is_trivial() const { return invariant_factors.empty(); }
    std::uint64_t order() const;
    bool operator==(const AbGroupStructure& o) const = default;
    std::string str() const;

    /// Normalizes an arbitrary list of cyclic orders (1s allowed) to a divisor chain.
    static AbGroupStructure from_cyclic_orders(const std::vector<std::int64_t>& orders);
    static AbGroupStructure from_invariants(const std::vector<Int>& factors);
};

bool is_divisor_chain(const std::vector<std::int64_t>& factors);

/// Skew bilinear form G x G -> Q/Z stored on generators.
class Pairing {
public:
    /// Validates well-definedness (den | gcd(orders[i], orders[j])), zero diagonal and skewness.
    Pairing(FinAbGroup group, std::vector<std::vector<QmodZ>> matrix);

    static Pairing zero(const FinAbGroup& group);

    const FinAbGroup& group() const { return group_; }
    const std::vector<std::vector<QmodZ>>& matrix() const { return matrix_; }
    const QmodZ& value(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

    bool operator==(const Pairing& o) const = default;

private:
    FinAbGroup group_;
    std::vector<std::vector<QmodZ>> matrix_;
};

QmodZ eval_pairing(const Pairing& P, const GroupElement& a, const GroupElement& b);

/// Matrix of E: G -> G^ in generator / dual-generator coordinates; column j is E(gen_j).
/// The dual generator chi_i has chi_i(gen_k) = delta_ik / orders[i].
IntMatrix e_matrix(const Pairing& P);

/// G^ / im(E), by Smith normal form of [M | diag(orders)].
AbGroupStructure pairing_cokernel(const Pairing& P);

/// ker(E) = {a : e(a, .) = 0}.
AbGroupStructure pairing_radical(const Pairing& P);

bool is_nondegenerate(const Pairing& P);

inline constexpr std::uint64_t kDefaultBruteBound = 1'000'000;

/// Enumeration oracle for pairing_cokernel; independent of the Smith normal form path.
AbGroupStructure brute_cokernel(const Pairing& P, std::uint64_t bound = kDefaultBruteBound);

/// Pairing on (Z/(n+1))^4 with generators (alpha1, beta1, alpha2, beta2),
/// e(alpha_i, beta_i) = b_i / (n+1) and all other generator pairs orthogonal.
Pairing standard_kum_pairing(std::int64_t n, std::int64_t b1, std::int64_t b2);

enum class Og6Case { DIV1_NOT4, DIV1_DIV4, DIV2 };

std::string to_string(Og6Case c);

/// Model pairings on (Z/2)^8 = J[2] x J^[2] (generators: four of J[2], then four of J^[2]).
Pairing standard_og6_pairing(Og6Case c);

/// Symplectic (Z/2)^(2k) with the standard block form on consecutive generator pairs.
Pairing symplectic_z2(std::size_t k);

struct SymplecticBasis {
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    std::vector<std::int64_t> d;   // e(x_i, y_i) = 1 / d[i], d ascending
};

/// Decomposes a nondegenerate pairing into hyperbolic pairs: e(x_i, y_j) = delta_ij / d_i,
/// e(x_i, x_j) = e(y_i, y_j) = 0, and the x's, y's together generate G.
SymplecticBasis symplectic_basis(const Pairing& P);

/// Pointwise sum (product of the multiplicative pairings).
Pairing tensor_pairing(const Pairing& P1, const Pairing& P2);

/// Size of the subgroup generated by gens, by closure enumeration.
std::uint64_t generated_subgroup_size(const FinAbGroup& G, const std::vector<GroupElement>& gens);

} // namespace thetagrp::group
