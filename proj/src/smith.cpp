#include "thetagrp/smith.hpp"

#include <utility>

#include "thetagrp/errors.hpp"

namespace thetagrp {

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix I(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B)
{
    if (A.empty()) return {};
    const std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    require(A[0].size() == k, "mat_mul: dimension mismatch");
    IntMatrix C(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

std::vector<Int> SmithForm::diagonal() const
{
    std::vector<Int> d;
    for (std::size_t i = 0; i < S.size() && i < (S.empty() ? 0 : S[0].size()); ++i)
        d.push_back(S[i][i]);
    return d;
}

namespace {

// Row and column operations on S, mirrored onto U (rows) and V (columns).
struct Reducer {
    IntMatrix& S;
    IntMatrix& U;
    IntMatrix& V;
    std::size_t rows, cols;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        std::swap(S[a], S[b]);
        std::swap(U[a], U[b]);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (auto& row : S) std::swap(row[a], row[b]);
        for (auto& row : V) std::swap(row[a], row[b]);
    }

    // row[dst] -= k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& k)
    {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols; ++j) S[dst][j] -= k * S[src][j];
        for (std::size_t j = 0; j < rows; ++j) U[dst][j] -= k * U[src][j];
    }

    // col[dst] -= k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Int& k)
    {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows; ++i) S[i][dst] -= k * S[i][src];
        for (std::size_t i = 0; i < cols; ++i) V[i][dst] -= k * V[i][src];
    }

    void negate_row(std::size_t r)
    {
        for (auto& x : S[r]) x = -x;
        for (auto& x : U[r]) x = -x;
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& A)
{
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    for (const auto& row : A) require(row.size() == cols, "smith_normal_form: ragged matrix");

    SmithForm F{A, identity_matrix(rows), identity_matrix(cols), 0};
    Reducer R{F.S, F.U, F.V, rows, cols};
    IntMatrix& S = F.S;

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (S[i][j] != 0 && (!found || abs(S[i][j]) < abs(S[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        R.swap_rows(t, pi);
        R.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (S[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S[i][t].get_mpz_t(), S[t][t].get_mpz_t());
                R.add_row(i, t, q);
                if (S[i][t] != 0) {
                    R.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (S[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S[t][j].get_mpz_t(), S[t][t].get_mpz_t());
                R.add_col(j, t, q);
                if (S[t][j] != 0) {
                    R.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Row and column are clear; enforce divisibility of the trailing block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!divides(S[t][t], S[i][j])) {
                        R.add_row(t, i, -1);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (S[t][t] < 0) R.negate_row(t);
    }
    F.rank = t;
    return F;
}

std::vector<Int> torsion_invariants(const IntMatrix& A)
{
    const std::size_t rows = A.size();
    SmithForm F = smith_normal_form(A);
    require(F.rank == rows, "torsion_invariants: quotient is infinite");
    std::vector<Int> out;
    for (const Int& d : F.diagonal())
        if (d != 1) out.push_back(d);
    return out;
}

} // namespace thetagrp
