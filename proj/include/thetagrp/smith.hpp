#pragma once

#include <cstddef>
#include <vector>

#include "thetagrp/integer.hpp"

namespace thetagrp {

/// Smith normal form S = U * A * V of an integer matrix A (rows x cols),
/// with U, V unimodular and S diagonal, S[i][i] | S[i+1][i+1], S[i][i] >= 0.
struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Invariant factors of the finitely generated group Z^rows / (column span of A),
/// restricted to its torsion part, with unit factors dropped.
/// Throws if the quotient is infinite (rank(A) < rows).
std::vector<Int> torsion_invariants(const IntMatrix& A);

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix identity_matrix(std::size_t n);

} // namespace thetagrp
