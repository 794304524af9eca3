#include <torsur/abelian.hpp>
#include <torsur/lattice.hpp>
#include <torsur/snf.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace torsur;

namespace {

bool is_unimodular(const IntMatrix& m) {
    Int d = m.det();
    return d == 1 || d == -1;
}

void check_snf_contract(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));

    // diagonal, nonnegative, divisibility chain, zeros last
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) CHECK(s.d.at(i, i) >= 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.d.at(i, i) == 0)
            CHECK(s.d.at(i + 1, i + 1) == 0);
        else
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("snf of identity") {
    IntMatrix a = IntMatrix::identity(3);
    SnfResult s = smith_normal_form(a);
    CHECK(s.d == a);
    CHECK(s.u == a);
    CHECK(s.v == a);
}

TEST_CASE("snf diag(2,3) -> diag(1,6)") {
    IntMatrix a{{2, 0}, {0, 3}};
    SnfResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    check_snf_contract(a);
}

TEST_CASE("snf reads off Z_3 + Z for the (p,k)=(2,1) relation") {
    IntMatrix a{{3, 0}, {0, 0}};
    SnfResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 3);
    CHECK(s.d.at(1, 1) == 0);
    CHECK(s.rank == 1);
}

TEST_CASE("snf matches the gcd-of-minors oracle on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = oracle::random_matrix(rng, 6, 9);
        SnfResult s = smith_normal_form(a);
        std::vector<Int> expect = oracle::smith_invariants_by_minors(a);
        CHECK(s.rank == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(s.d.at(i, i) == expect[i]);
        check_snf_contract(a);
    }
}

TEST_CASE("group_from_presentation") {
    SUBCASE("free group from empty relations") {
        FgAbGroup g = group_from_presentation(2, IntMatrix(0, 2));
        CHECK(g == FgAbGroup{2, {}});
        CHECK(g.to_string() == "Z^2");
    }
    SUBCASE("Z + Z/3") {
        FgAbGroup g = group_from_presentation(2, IntMatrix{{3, 0}});
        CHECK(g == FgAbGroup{1, {3}});
        CHECK(g.to_string() == "Z^1 + Z/3");
    }
    SUBCASE("matches the minors oracle on a 3-generator presentation") {
        IntMatrix rels{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
        std::vector<Int> inv = oracle::smith_invariants_by_minors(rels);
        FgAbGroup expect;
        expect.free_rank = 3 - inv.size();
        for (const Int& d : inv)
            if (d >= 2) expect.torsion.push_back(d);
        CHECK(group_from_presentation(3, rels) == expect);
    }
    SUBCASE("column count mismatch") {
        CHECK_THROWS_AS(group_from_presentation(2, IntMatrix{{1, 2, 3}}), Error);
    }
    SUBCASE("invariant under row operations and permutations") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (int trial = 0; trial < 50; ++trial) {
            IntMatrix rels(3, 4);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) rels.at(i, j) = entry(rng);
            FgAbGroup base = group_from_presentation(4, rels);

            IntMatrix shuffled = rels;
            shuffled.swap_rows(0, 2);
            shuffled.add_row_multiple(1, 0, entry(rng));
            CHECK(group_from_presentation(4, shuffled) == base);
        }
    }
}

TEST_CASE("quotient_by_element") {
    Presentation z2(2, IntMatrix(0, 2));
    CHECK(quotient_by_element(z2, {1, 0}) == FgAbGroup{1, {}});
    CHECK(quotient_by_element(z2, {3, 0}) == FgAbGroup{1, {3}});

    // appended row agrees with rerunning the oracle on combined relations
    Presentation p(3, IntMatrix{{2, 0, 0}});
    IntMatrix combined{{2, 0, 0}, {0, 5, 0}};
    std::vector<Int> inv = oracle::smith_invariants_by_minors(combined);
    FgAbGroup expect;
    expect.free_rank = 3 - inv.size();
    for (const Int& d : inv)
        if (d >= 2) expect.torsion.push_back(d);
    CHECK(quotient_by_element(p, {0, 5, 0}) == expect);

    CHECK_THROWS_AS(quotient_by_element(z2, {1, 0, 0}), Error);
}

TEST_CASE("lattice membership") {
    Lattice l = Lattice::from_generators(3, {{1, 0, 0}});
    auto c = l.membership({2, 0, 0});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);

    Lattice m = Lattice::from_generators(3, {{3, 1, 0}, {0, 0, 1}});
    auto c2 = m.membership({3, 1, 5});
    REQUIRE(c2.has_value());
    CHECK(*c2 == IntVec{1, 5});
    CHECK_FALSE(m.contains({1, 0, 0}));

    CHECK_THROWS_AS(m.membership({1, 0}), Error);
}

TEST_CASE("lattice membership agrees with brute-force enumeration") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntVec> gens;
        int n = count(rng);
        for (int i = 0; i < n; ++i)
            gens.push_back({entry(rng), entry(rng), entry(rng)});
        Lattice l = Lattice::from_generators(3, gens);

        IntVec v = {entry(rng), entry(rng), entry(rng)};
        // enumerate against the canonical basis so the bound covers the case
        bool expect = oracle::member_by_enumeration(l.basis(), v, 10);
        auto got = l.membership(v);
        if (expect) {
            REQUIRE(got.has_value());
        } else if (got) {
            // outside the enumeration bound: verify the coefficients directly
            IntVec sum(3, 0);
            for (std::size_t i = 0; i < l.basis().size(); ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    sum[j] += (*got)[i] * l.basis()[i][j];
            CHECK(sum == v);
        }
    }
}

TEST_CASE("saturate") {
    SUBCASE("scaled primitive vector") {
        Lattice l = Lattice::from_generators(3, {{2, 0, 0}});
        CHECK(l.saturate() == Lattice::from_generators(3, {{1, 0, 0}}));
    }
    SUBCASE("index-4 sublattice of a coordinate plane") {
        Lattice l = Lattice::from_generators(3, {{2, 2, 0}, {0, 4, 0}});
        Lattice expect = Lattice::from_generators(3, {{1, 0, 0}, {0, 1, 0}});
        CHECK(l.saturate() == expect);
    }
    SUBCASE("idempotent and rank-preserving on random lattices") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> entry(-6, 6);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<IntVec> gens = {{entry(rng), entry(rng), entry(rng)},
                                        {entry(rng), entry(rng), entry(rng)}};
            Lattice l = Lattice::from_generators(3, gens);
            Lattice s = l.saturate();
            CHECK(s.rank() == l.rank());
            CHECK(s.saturate() == s);
            CHECK(s.contains(l));
        }
    }
}
