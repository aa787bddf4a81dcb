#include <random>
#include <set>

#include "doctest.h"

#include "thetagrp/errors.hpp"
#include "thetagrp/finabgrp.hpp"

namespace thetagrp {
bool operator<(const QmodZ& a, const QmodZ& b)
{
    return std::make_pair(a.num(), a.den()) < std::make_pair(b.num(), b.den());
}
} // namespace thetagrp

using namespace thetagrp;
using namespace thetagrp::group;

namespace {

std::vector<std::vector<QmodZ>> qmat(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<std::vector<QmodZ>> m;
    for (const auto& r : rows) {
        std::vector<QmodZ> v;
        for (const char* s : r) v.push_back(QmodZ::parse(s));
        m.push_back(v);
    }
    return m;
}

Pairing sympl2() { return Pairing(FinAbGroup({2, 2}), qmat({{"0", "1/2"}, {"1/2", "0"}})); }

// Structure of a finite abelian group given as a list of element orders: the
// number of cyclic factors of order >= p^j equals log_p of #{p^j-torsion} / #{p^(j-1)-torsion}.
AbGroupStructure structure_from_orders(const std::vector<std::int64_t>& orders)
{
    std::int64_t exp = 1;
    for (auto o : orders) exp = lcm64(exp, o);
    if (exp == 1) return {};
    std::vector<std::int64_t> cyclic;
    for (auto [p, k] : factorize(exp)) {
        (void)k;
        std::vector<std::uint64_t> tors;   // tors[j] = #{x : p-part of x killed by p^j}
        std::int64_t pj = 1;
        for (;;) {
            std::uint64_t c = 0;
            for (auto o : orders) {
                std::int64_t op = 1;
                while (o % p == 0) {
                    o /= p;
                    op *= p;
                }
                if (pj % op == 0) ++c;
            }
            tors.push_back(c);
            if (c == orders.size()) break;
            pj *= p;
        }
        std::vector<int> rank;   // rank[j] = #factors with p-part >= p^(j+1)
        for (std::size_t j = 1; j < tors.size(); ++j) {
            std::uint64_t ratio = tors[j] / tors[j - 1];
            int r = 0;
            while (ratio > 1) {
                ratio /= static_cast<std::uint64_t>(p);
                ++r;
            }
            rank.push_back(r);
        }
        for (std::size_t j = 0; j < rank.size(); ++j) {
            const int exact = rank[j] - (j + 1 < rank.size() ? rank[j + 1] : 0);
            std::int64_t pp = 1;
            for (std::size_t t = 0; t <= j; ++t) pp *= p;
            for (int t = 0; t < exact; ++t) cyclic.push_back(pp);
        }
    }
    return AbGroupStructure::from_cyclic_orders(cyclic);
}

AbGroupStructure brute_radical(const Pairing& P)
{
    const FinAbGroup& G = P.group();
    std::vector<std::int64_t> orders;
    for (std::uint64_t i = 0; i < G.size(); ++i) {
        const GroupElement a = G.element_at(i);
        bool in_kernel = true;
        for (std::size_t j = 0; j < G.rank() && in_kernel; ++j)
            in_kernel = eval_pairing(P, a, G.generator(j)).is_zero();
        if (in_kernel) orders.push_back(G.element_order(a));
    }
    return structure_from_orders(orders);
}

std::uint64_t image_size(const Pairing& P)
{
    const FinAbGroup& G = P.group();
    std::set<std::vector<QmodZ>> seen;
    for (std::uint64_t i = 0; i < G.size(); ++i) {
        const GroupElement a = G.element_at(i);
        std::vector<QmodZ> row;
        for (std::size_t j = 0; j < G.rank(); ++j) row.push_back(eval_pairing(P, a, G.generator(j)));
        seen.insert(row);
    }
    return seen.size();
}

template <class Rng>
Pairing random_pairing(Rng& rng, const std::vector<std::int64_t>& orders)
{
    const FinAbGroup G(orders);
    std::vector<std::vector<QmodZ>> m(orders.size(), std::vector<QmodZ>(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            const std::int64_t g = gcd64(orders[i], orders[j]);
            std::uniform_int_distribution<std::int64_t> c(0, g - 1);
            m[i][j] = QmodZ(c(rng), g);
            m[j][i] = -m[i][j];
        }
    return Pairing(G, m);
}

template <class Rng>
GroupElement random_element(Rng& rng, const FinAbGroup& G)
{
    std::uniform_int_distribution<std::uint64_t> c(0, G.size() - 1);
    return G.element_at(c(rng));
}

} // namespace

TEST_CASE("QmodZ basics")
{
    CHECK(QmodZ(4, 6) == QmodZ(2, 3));
    CHECK(QmodZ(-1, 3) == QmodZ(2, 3));
    CHECK(QmodZ(3, 3) == QmodZ());
    CHECK((QmodZ(1, 2) + QmodZ(1, 2)).is_zero());
    CHECK(QmodZ(1, 3) * 2 == QmodZ(2, 3));
    CHECK(QmodZ::parse("5/4") == QmodZ(1, 4));
    CHECK(QmodZ::parse("0") == QmodZ());
    CHECK(QmodZ(2, 3).str() == "2/3");
    CHECK(QmodZ().str() == "0/1");
    CHECK_THROWS_AS(QmodZ(1, 0), DomainError);
    CHECK_THROWS_AS(QmodZ::parse("1/x"), DomainError);
}

TEST_CASE("FinAbGroup indexing and arithmetic")
{
    const FinAbGroup G({2, 3});
    CHECK(G.size() == 6);
    CHECK(G.exponent() == 6);
    CHECK_FALSE(G.has_uniform_exponent());
    CHECK(G.element_at(1) == GroupElement{1, 0});
    CHECK(G.element_at(2) == GroupElement{0, 1});
    for (std::uint64_t i = 0; i < G.size(); ++i) CHECK(G.index_of(G.element_at(i)) == i);
    CHECK(G.add({1, 2}, {1, 2}) == GroupElement{0, 1});
    CHECK(G.element_order({1, 1}) == 6);
    CHECK(G.reduce({-1, 7}) == GroupElement{1, 1});
    CHECK_THROWS_AS(FinAbGroup({1, 3}), DomainError);
    CHECK_THROWS_AS(G.check({2, 0}), DomainError);
}

TEST_CASE("AbGroupStructure normalization")
{
    CHECK(AbGroupStructure::from_cyclic_orders({2, 3}).invariant_factors == std::vector<std::int64_t>{6});
    CHECK(AbGroupStructure::from_cyclic_orders({1, 1, 3, 3}).str() == "[3,3]");
    CHECK(AbGroupStructure::from_cyclic_orders({4, 2, 1}).invariant_factors ==
          std::vector<std::int64_t>{2, 4});
    CHECK(AbGroupStructure::from_cyclic_orders({1, 1}).is_trivial());
    CHECK(AbGroupStructure{}.str() == "[]");
    CHECK(AbGroupStructure{{3, 3}}.order() == 9);
    CHECK(is_divisor_chain({2, 4, 12}));
    CHECK_FALSE(is_divisor_chain({4, 6}));
    CHECK_FALSE(is_divisor_chain({1, 2}));
}

TEST_CASE("Pairing validation")
{
    CHECK_THROWS_AS(Pairing(FinAbGroup({2, 2}), qmat({{"0", "1/2"}, {"0", "0"}})), DomainError);
    CHECK_THROWS_AS(Pairing(FinAbGroup({2, 2}), qmat({{"1/2", "1/2"}, {"1/2", "0"}})), DomainError);
    CHECK_THROWS_AS(Pairing(FinAbGroup({2, 3}), qmat({{"0", "1/2"}, {"1/2", "0"}})), DomainError);
    CHECK_THROWS_AS(Pairing(FinAbGroup({2, 2}), qmat({{"0"}})), DomainError);
}

TEST_CASE("eval_pairing examples")
{
    const Pairing P = standard_kum_pairing(2, 1, 1);
    const FinAbGroup& G = P.group();
    CHECK(eval_pairing(P, G.generator(0), G.generator(1)) == QmodZ(1, 3));
    CHECK(eval_pairing(P, G.generator(0), G.generator(2)) == QmodZ());
    CHECK(eval_pairing(P, G.scale(G.generator(0), 2), G.generator(1)) == QmodZ(2, 3));
    CHECK_THROWS_AS(eval_pairing(P, {1, 0}, {0, 1, 0, 0}), DomainError);
}

TEST_CASE("e_matrix examples")
{
    const Pairing Z = Pairing::zero(FinAbGroup::uniform(3, 2));
    CHECK(e_matrix(Z) == IntMatrix(2, IntVector(2, 0)));

    const IntMatrix S = e_matrix(sympl2());
    CHECK(mod(S[0][1], 2) == 1);
    CHECK(mod(S[1][0], 2) == 1);
    CHECK(mod(S[0][0], 2) == 0);
    CHECK(mod(S[1][1], 2) == 0);

    const IntMatrix K = e_matrix(standard_kum_pairing(2, 1, 1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool partner = (i / 2 == j / 2) && i != j;
            CHECK((mod(K[i][j], 3) != 0) == partner);
        }
}

TEST_CASE("cokernel, radical and nondegeneracy examples")
{
    const Pairing Z3 = Pairing::zero(FinAbGroup::uniform(3, 2));
    CHECK(pairing_cokernel(sympl2()).is_trivial());
    CHECK(pairing_cokernel(Z3).str() == "[3,3]");
    CHECK(pairing_cokernel(standard_kum_pairing(2, 1, 3)).str() == "[3,3]");

    CHECK(pairing_radical(sympl2()).is_trivial());
    CHECK(pairing_radical(Z3).str() == "[3,3]");
    CHECK(pairing_radical(standard_og6_pairing(Og6Case::DIV1_DIV4)).str() == "[2,2,2,2]");

    CHECK(is_nondegenerate(symplectic_z2(4)));
    CHECK_FALSE(is_nondegenerate(Z3));
    CHECK(is_nondegenerate(standard_kum_pairing(2, 1, 1)));
}

TEST_CASE("brute_cokernel examples")
{
    CHECK(brute_cokernel(Pairing::zero(FinAbGroup::uniform(2, 4))).str() == "[2,2,2,2]");
    CHECK(brute_cokernel(standard_kum_pairing(2, 1, 3)).str() == "[3,3]");
    CHECK(brute_cokernel(standard_og6_pairing(Og6Case::DIV2)).str() == "[2,2,2,2,2,2,2,2]");
    CHECK_THROWS_AS(brute_cokernel(Pairing::zero(FinAbGroup::uniform(2, 8)), 100), DomainError);
}

TEST_CASE("standard pairings")
{
    CHECK(pairing_cokernel(standard_kum_pairing(2, 1, 3)).str() == "[3,3]");
    const Pairing P33 = standard_kum_pairing(2, 3, 3);
    CHECK(P33 == Pairing::zero(FinAbGroup::uniform(3, 4)));
    CHECK(pairing_cokernel(P33).str() == "[3,3,3,3]");
    CHECK(is_nondegenerate(standard_kum_pairing(2, 1, 1)));
    CHECK_THROWS_AS(standard_kum_pairing(2, 2, 1), DomainError);
    CHECK_THROWS_AS(standard_kum_pairing(1, 1, 1), DomainError);

    CHECK(pairing_cokernel(standard_og6_pairing(Og6Case::DIV1_NOT4)).is_trivial());
    CHECK(pairing_cokernel(standard_og6_pairing(Og6Case::DIV1_DIV4)).str() == "[2,2,2,2]");
    CHECK(pairing_cokernel(standard_og6_pairing(Og6Case::DIV2)).str() == "[2,2,2,2,2,2,2,2]");
}

TEST_CASE("tensor_pairing examples")
{
    const Pairing P = standard_kum_pairing(2, 1, 3);
    CHECK(tensor_pairing(Pairing::zero(P.group()), P) == P);
    const Pairing S = symplectic_z2(2);
    CHECK(tensor_pairing(S, S) == Pairing::zero(S.group()));
    const Pairing PP = tensor_pairing(P, P);
    CHECK(PP.value(0, 1) == QmodZ(2, 3));
    CHECK(PP.value(2, 3) == QmodZ());
    CHECK(brute_cokernel(PP).str() == "[3,3]");
    CHECK_THROWS_AS(tensor_pairing(S, P), DomainError);
}

TEST_CASE("symplectic_basis examples")
{
    const SymplecticBasis B = symplectic_basis(sympl2());
    REQUIRE(B.pairs.size() == 1);
    CHECK(B.pairs[0].first == GroupElement{1, 0});
    CHECK(B.pairs[0].second == GroupElement{0, 1});
    CHECK(B.d == std::vector<std::int64_t>{2});

    const SymplecticBasis K = symplectic_basis(standard_kum_pairing(2, 1, 1));
    REQUIRE(K.pairs.size() == 2);
    // x's: alpha1, alpha2; y's: beta1, beta2
    CHECK(K.pairs[0].first == GroupElement{1, 0, 0, 0});
    CHECK(K.pairs[1].first == GroupElement{0, 0, 1, 0});
    CHECK(K.pairs[0].second == GroupElement{0, 1, 0, 0});
    CHECK(K.pairs[1].second == GroupElement{0, 0, 0, 1});

    CHECK_THROWS_AS(symplectic_basis(Pairing::zero(FinAbGroup::uniform(2, 2))), DomainError);
}

TEST_CASE("cokernel == brute == radical on random pairings")
{
    std::mt19937_64 rng(99);
    const std::vector<std::vector<std::int64_t>> shapes = {
        {2},        {2, 2},       {3, 3},       {4, 2},       {2, 4, 4},    {6, 6},
        {3, 9},     {2, 2, 2, 2}, {4, 4, 4},    {3, 3, 3, 3}, {6, 4},       {5, 5, 5},
        {12, 6, 2}, {8, 8, 2},    {2, 2, 2, 2, 2, 2}, {9, 3, 3},
    };
    for (const auto& shape : shapes)
        for (int trial = 0; trial < 12; ++trial) {
            const Pairing P = random_pairing(rng, shape);
            REQUIRE(P.group().size() <= 4096);
            const AbGroupStructure c = pairing_cokernel(P);
            CHECK(c == brute_cokernel(P));
            CHECK(pairing_radical(P) == c);
            CHECK(brute_radical(P) == c);
            CHECK(is_divisor_chain(c.invariant_factors));
            CHECK(is_nondegenerate(P) == c.is_trivial());
            CHECK(c.is_trivial() == (image_size(P) == P.group().size()));
        }
}

TEST_CASE("skewness and bilinearity on random triples")
{
    std::mt19937_64 rng(5);
    const std::vector<Pairing> ps = {standard_kum_pairing(5, 2, 3), random_pairing(rng, {4, 4, 2, 2}),
                                     random_pairing(rng, {6, 6, 6}), symplectic_z2(4)};
    for (const Pairing& P : ps) {
        const FinAbGroup& G = P.group();
        for (int trial = 0; trial < 1000; ++trial) {
            const GroupElement a = random_element(rng, G), b = random_element(rng, G),
                               c = random_element(rng, G);
            CHECK(eval_pairing(P, a, a).is_zero());
            CHECK(eval_pairing(P, G.add(a, b), c) == eval_pairing(P, a, c) + eval_pairing(P, b, c));
            CHECK(eval_pairing(P, a, b) == -eval_pairing(P, b, a));
        }
    }
}

TEST_CASE("symplectic_basis reproduces the canonical form and generates G")
{
    std::mt19937_64 rng(17);
    std::vector<Pairing> ps = {standard_kum_pairing(2, 1, 1), standard_kum_pairing(5, 1, 1),
                               symplectic_z2(4), standard_og6_pairing(Og6Case::DIV1_NOT4)};
    const std::vector<std::vector<std::int64_t>> shapes = {{4, 4}, {6, 6, 6, 6}, {4, 4, 4, 4}, {3, 3, 3, 3}};
    for (const auto& shape : shapes)
        for (int found = 0, tries = 0; found < 4 && tries < 400; ++tries) {
            const Pairing P = random_pairing(rng, shape);
            if (!is_nondegenerate(P)) continue;
            ps.push_back(P);
            ++found;
        }
    for (const Pairing& P : ps) {
        const SymplecticBasis B = symplectic_basis(P);
        const std::size_t k = B.pairs.size();
        std::vector<GroupElement> gens;
        for (std::size_t i = 0; i < k; ++i) {
            gens.push_back(B.pairs[i].first);
            gens.push_back(B.pairs[i].second);
            if (i) CHECK(B.d[i - 1] <= B.d[i]);
            for (std::size_t j = 0; j < k; ++j) {
                const auto& [xi, yi] = B.pairs[i];
                const auto& [xj, yj] = B.pairs[j];
                CHECK(eval_pairing(P, xi, xj).is_zero());
                CHECK(eval_pairing(P, yi, yj).is_zero());
                CHECK(eval_pairing(P, xi, yj) == (i == j ? QmodZ(1, B.d[i]) : QmodZ()));
            }
        }
        CHECK(generated_subgroup_size(P.group(), gens) == P.group().size());
        std::uint64_t prod = 1;
        for (auto d : B.d) prod *= static_cast<std::uint64_t>(d * d);
        CHECK(prod == P.group().size());
    }
}
