#include <functional>
#include <random>

#include "doctest.h"

#include "thetagrp/errors.hpp"
#include "thetagrp/smith.hpp"

using namespace thetagrp;

namespace {

Int det(const IntMatrix& M)
{
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(M[r][k]);
            minor.push_back(row);
        }
        const Int t = M[0][c] * det(minor);
        total += (c % 2 ? -t : t);
    }
    return total;
}

// gcd of all k x k minors
Int determinantal_divisor(const IntMatrix& A, std::size_t k)
{
    const std::size_t R = A.size(), C = A[0].size();
    Int g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rows.size() == k) {
            pick_cols(0);
            return;
        }
        for (std::size_t r = start; r < R; ++r) {
            rows.push_back(r);
            pick_rows(r + 1);
            rows.pop_back();
        }
    };
    pick_cols = [&](std::size_t start) {
        if (cols.size() == k) {
            IntMatrix sub(k, IntVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = A[rows[i]][cols[j]];
            g = gcd(g, det(sub));
            return;
        }
        for (std::size_t c = start; c < C; ++c) {
            cols.push_back(c);
            pick_cols(c + 1);
            cols.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix M;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        M.push_back(v);
    }
    return M;
}

void check_form(const IntMatrix& A)
{
    const SmithForm F = smith_normal_form(A);
    CHECK(mat_mul(mat_mul(F.U, A), F.V) == F.S);
    CHECK(abs(det(F.U)) == 1);
    CHECK(abs(det(F.V)) == 1);
    const std::vector<Int> diag = F.diagonal();
    for (std::size_t i = 0; i < F.S.size(); ++i)
        for (std::size_t j = 0; j < F.S[0].size(); ++j)
            if (i != j) CHECK(F.S[i][j] == 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        CHECK(divides(diag[i], diag[i + 1]));
    }
    // d_1 ... d_k = D_k
    Int prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
        prod *= diag[k - 1];
        CHECK(prod == determinantal_divisor(A, k));
    }
}

} // namespace

TEST_CASE("smith normal form examples")
{
    const SmithForm F = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(F.diagonal() == std::vector<Int>{2, 6, 12});
    CHECK(F.rank == 3);

    const SmithForm Z = smith_normal_form(mat({{0, 0}, {0, 0}}));
    CHECK(Z.diagonal() == std::vector<Int>{0, 0});
    CHECK(Z.rank == 0);

    check_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    check_form(mat({{6, 0}, {0, 4}}));
    check_form(mat({{0, 3, 0, 5}, {0, 0, 0, 0}, {7, 1, 2, 0}}));
}

TEST_CASE("torsion invariants")
{
    CHECK(torsion_invariants(mat({{6, 0}, {0, 4}})) == std::vector<Int>{2, 12});
    CHECK(torsion_invariants(mat({{1, 0}, {0, 1}})).empty());
    CHECK(torsion_invariants(mat({{3, 0, 3}, {0, 3, 0}})) == std::vector<Int>{3, 3});
    CHECK_THROWS_AS(torsion_invariants(mat({{2, 0}, {0, 0}})), DomainError);
}

TEST_CASE("smith normal form against determinantal divisors on random matrices")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = dim(rng), k = dim(rng);
        IntMatrix A(r, IntVector(k));
        for (auto& row : A)
            for (auto& x : row) x = c(rng);
        check_form(A);
    }
}
