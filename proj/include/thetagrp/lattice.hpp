#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "thetagrp/integer.hpp"

namespace thetagrp::lattice {

/// Integral lattice Z^rank with a symmetric Gram matrix.
class GramLattice {
public:
    GramLattice(std::string name, IntMatrix gram);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }
    const Int& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    Int determinant() const;

private:
    std::string name_;
    IntMatrix gram_;
};

using LatticeVector = IntVector;

/// Lambda_n = U + U + U + <-2(n+1)>, basis (e1,f1,e2,f2,e3,f3,delta_n).
GramLattice lambda_kum(std::int64_t n);

/// Lambda_OG6 = U + U + U + <-2> + <-2>, basis (e1,f1,e2,f2,e3,f3,g1,g2).
GramLattice lambda_og6();

/// Resolves "kum:<n>" or "og6".
GramLattice lattice_by_name(const std::string& name);

/// Unit vector in coordinate i of a rank-r lattice.
LatticeVector basis_vector(std::size_t rank, std::size_t i);

Int bbf_pair(const GramLattice& L, const LatticeVector& v, const LatticeVector& w);
Int square(const GramLattice& L, const LatticeVector& v);

/// Nonnegative generator of the ideal {(v, w) : w in L}; 0 for v = 0.
Int divisibility(const GramLattice& L, const LatticeVector& v);

bool is_primitive(const GramLattice& L, const LatticeVector& v);

enum class Og6Class { I, II, III };

std::string to_string(Og6Class c);

Og6Class og6_class(const LatticeVector& v);

/// Primitive a, b lie in one orbit iff they have equal square and equal class.
bool og6_same_orbit(const LatticeVector& a, const LatticeVector& b);

/// Ambient lattice H1 + H2 + H3 + H4 (rank 8) in which Lambda_n = v_n^perp.
GramLattice kum_ambient();

/// Embeds a Lambda_n vector into the ambient lattice (delta_n -> e4 - (n+1) f4).
LatticeVector embed_in_ambient(std::int64_t n, const LatticeVector& v);

/// v_n = e4 + (n+1) f4 in the ambient lattice.
LatticeVector kum_vn(std::int64_t n);

struct OrbitInvariant {
    Int x0;
    Int p;
    Int q;
    LatticeVector beta;   // rank 6, the H1+H2+H3 component
    LatticeVector e;      // isotropic witness in the ambient lattice
    LatticeVector f;      // isotropic witness in the ambient lattice
};

/// Splits alpha = 2(n+1) beta + x0 delta_n and finds the unique (p, q) with
/// p q = n+1, p > 0, 2p | x0-1, 2q | x0+1, together with isotropic e, f
/// satisfying alpha = p e + q f in the ambient lattice.
OrbitInvariant kum_orbit_split(std::int64_t n, const LatticeVector& alpha);

} // namespace thetagrp::lattice
