#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thetagrp/finabgrp.hpp"
#include "thetagrp/qmodz.hpp"

namespace thetagrp::heis {

using group::GroupElement;

/// (scalar, x, f) in C* x J(d) x J(d)^, the scalar a root of unity exp(2 pi i t).
/// f is stored by character exponents: f(y) = sum_i f_i y_i / d_i.
struct HeisElem {
    QmodZ scalar;
    GroupElement x;
    GroupElement f;

    bool operator==(const HeisElem& o) const = default;
};

/// Exact n x n generalized permutation matrix: column y holds exp(2 pi i phases[y])
/// at row perm[y].
struct GenPermMatrix {
    std::size_t dim = 0;
    std::vector<std::size_t> perm;
    std::vector<QmodZ> phases;

    bool operator==(const GenPermMatrix& o) const = default;

    bool is_scalar(const QmodZ& phase) const;
};

GenPermMatrix gpm_identity(std::size_t dim);
GenPermMatrix gpm_mul(const GenPermMatrix& A, const GenPermMatrix& B);
GenPermMatrix gpm_inverse(const GenPermMatrix& A);
GenPermMatrix gpm_commutator(const GenPermMatrix& A, const GenPermMatrix& B);

/// H(d) for d = (d_1, ..., d_g), each d_i >= 2.
class HeisenbergGroup {
public:
    explicit HeisenbergGroup(std::vector<std::int64_t> d);

    const std::vector<std::int64_t>& d() const { return d_; }
    const group::FinAbGroup& J() const { return J_; }

    /// Exponent N of J(d); the finite quotient uses scalars in mu_N.
    std::int64_t exponent() const { return J_.exponent(); }
    std::uint64_t rep_dim() const { return J_.size(); }

    HeisElem identity() const;
    HeisElem central(const QmodZ& t) const;
    HeisElem make(const QmodZ& t, GroupElement x, GroupElement f) const;
    void check(const HeisElem& a) const;

    /// <f, x> in Q/Z.
    QmodZ character(const GroupElement& f, const GroupElement& x) const;

    HeisElem mul(const HeisElem& a, const HeisElem& b) const;
    HeisElem inv(const HeisElem& a) const;

    /// Scalar of a b a^-1 b^-1.
    QmodZ commutator(const HeisElem& a, const HeisElem& b) const;

    /// Schroedinger action (a phi)(y) = t f(y) phi(x + y) on C^J, basis indexed
    /// by J in mixed-radix order (d_1 fastest). Column z goes to row z - x with
    /// phase t + f(z - x); this makes the map a homomorphism.
    GenPermMatrix schrodinger_matrix(const HeisElem& a) const;

    /// Size of the finite quotient mu_N x J x J^.
    std::uint64_t finite_size() const;
    HeisElem finite_element(std::uint64_t index) const;

    template <class Rng>
    HeisElem random_element(Rng& rng) const
    {
        std::uniform_int_distribution<std::int64_t> tdist(0, exponent() - 1);
        GroupElement x(d_.size()), f(d_.size());
        for (std::size_t i = 0; i < d_.size(); ++i) {
            std::uniform_int_distribution<std::int64_t> c(0, d_[i] - 1);
            x[i] = c(rng);
            f[i] = c(rng);
        }
        return HeisElem{QmodZ(tdist(rng), exponent()), x, f};
    }

private:
    std::vector<std::int64_t> d_;
    group::FinAbGroup J_;
};

HeisElem h_mul(const HeisenbergGroup& H, const HeisElem& a, const HeisElem& b);
HeisElem h_inv(const HeisenbergGroup& H, const HeisElem& a);
QmodZ h_commutator(const HeisenbergGroup& H, const HeisElem& a, const HeisElem& b);

/// Commutator pairing on J x J^ (generators: J's, then J^'s), read off from h_commutator.
group::Pairing heis_pairing(const std::vector<std::int64_t>& d);

GenPermMatrix schrodinger_matrix(const HeisenbergGroup& H, const HeisElem& a);

inline constexpr std::uint64_t kCharacterNormBound = 64;

/// (1/|H_fin|) sum |chi(h)|^2 over the finite quotient, exact.
mpq_class character_norm(const std::vector<std::int64_t>& d,
                         std::uint64_t bound = kCharacterNormBound);

/// dimV / prod(d); throws if not exact.
std::int64_t schrodinger_multiplicity(std::int64_t dimV, const std::vector<std::int64_t>& d);

/// Parses "t/u;(x1,...,xg);(f1,...,fg)".
HeisElem parse_elem(const HeisenbergGroup& H, const std::string& text);
std::string format_elem(const HeisElem& a);

} // namespace thetagrp::heis
