#include "doctest.h"

#include "rstft/abelian.hpp"

#include <random>

using namespace rstft;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long long max_abs) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<long long> val(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
    return m;
}

// product of random elementary row operations: unimodular by construction
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix m = IntMatrix::identity(n);
    if (n == 0) return m;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<long long> val(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = row(rng), j = row(rng);
        switch (kind(rng)) {
            case 0:
                m.swap_rows(i, j);
                break;
            case 1:
                m.negate_row(i);
                break;
            default:
                if (i != j) m.add_row_multiple(i, j, Int(val(rng)));
        }
    }
    return m;
}

FgAbGroup random_small_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rank(0, 2);
    std::uniform_int_distribution<int> nfac(0, 3);
    std::uniform_int_distribution<long long> fac(2, 9);
    std::vector<Int> factors;
    for (int i = rank(rng); i > 0; --i) factors.emplace_back(0);
    for (int i = nfac(rng); i > 0; --i) factors.emplace_back(fac(rng));
    return group_from_cyclic_factors(factors);
}

void check_snf_contract(const IntMatrix& a, const SmithDecomposition& s) {
    REQUIRE(s.d == s.u.multiplied(a).multiplied(s.v));
    REQUIRE(abs(determinant(s.u)) == 1);
    REQUIRE(abs(determinant(s.v)) == 1);
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d.at(i, j) == 0);
    std::size_t k = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < k; ++i) {
        REQUIRE(s.d.at(i, i) >= 0);
        if (i + 1 < k && s.d.at(i, i) != 0) REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        if (i + 1 < k && s.d.at(i, i) == 0) REQUIRE(s.d.at(i + 1, i + 1) == 0);
    }
}

}  // namespace

TEST_SUITE("abelian") {

TEST_CASE("smith normal form on pinned examples") {
    IntMatrix a{{2, 4}, {6, 8}};
    auto s = smith_normal_form(a);
    check_snf_contract(a, s);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);

    IntMatrix empty;
    auto se = smith_normal_form(empty);
    CHECK(se.d.rows() == 0);
    CHECK(se.d.cols() == 0);
    CHECK(se.u == IntMatrix::identity(0));
    CHECK(se.v == IntMatrix::identity(0));

    IntMatrix id = IntMatrix::identity(4);
    CHECK(smith_normal_form(id).d == id);
}

TEST_CASE("smith normal form contract and uniqueness on random matrices") {
    std::mt19937_64 rng(0xABE11A5);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix a = random_matrix(rng, 6, 9);
        auto s1 = smith_normal_form(a);
        check_snf_contract(a, s1);
        CHECK(smith_normal_form(a).d == s1.d);

        // D is invariant under unimodular pre/post multiplication
        IntMatrix left = random_unimodular(rng, a.rows());
        IntMatrix rt = random_unimodular(rng, a.cols());
        IntMatrix b = left.multiplied(a).multiplied(rt);
        CHECK(smith_normal_form(b).d == s1.d);
    }
}

TEST_CASE("cokernel on pinned examples") {
    CHECK(cokernel(IntMatrix{{2}}) == FgAbGroup::cyclic(2));
    CHECK(cokernel(IntMatrix(1, 0)) == FgAbGroup::free_group(1));
    CHECK(cokernel(IntMatrix{{2, 3}}) == FgAbGroup::trivial());
    CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == FgAbGroup{0, {6}});
}

TEST_CASE("cokernel invariances") {
    std::mt19937_64 rng(0xC0C0);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix a = random_matrix(rng, 5, 7);
        FgAbGroup base = cokernel(a);

        // agreement with the plain dense SNF route
        std::vector<Int> diag = invariant_factors(a);
        std::vector<Int> factors(a.rows(), Int(0));
        for (std::size_t i = 0; i < diag.size(); ++i)
            if (diag[i] != 0) factors[i] = diag[i];
        CHECK(base == group_from_cyclic_factors(factors));

        // row and column permutations
        IntMatrix p = a;
        if (p.rows() > 1) p.swap_rows(0, p.rows() - 1);
        if (p.cols() > 1) p.swap_cols(0, p.cols() - 1);
        CHECK(cokernel(p) == base);

        // appending zero columns
        IntMatrix z(a.rows(), a.cols() + 2);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) z.at(i, j) = a.at(i, j);
        CHECK(cokernel(z) == base);
    }
}

TEST_CASE("group canonical form and printing") {
    CHECK(group_from_cyclic_factors({Int(4), Int(6)}) == FgAbGroup{0, {2, 12}});
    CHECK(group_from_cyclic_factors({Int(1), Int(1)}) == FgAbGroup::trivial());
    CHECK(group_from_cyclic_factors({Int(0), Int(2)}).to_string() == "Z x Z/2");
    CHECK(FgAbGroup::trivial().to_string() == "0");
    CHECK(group_order(FgAbGroup{0, {2, 4}}) == 8);
    CHECK(group_order(FgAbGroup::free_group(1)) == 0);
}

TEST_CASE("hom groups on pinned examples") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    FgAbGroup z4 = FgAbGroup::cyclic(4);
    CHECK(hom_group(z2, z4) == z2);
    CHECK(hom_group(z2, z) == FgAbGroup::trivial());
    CHECK(hom_group(direct_sum(z, z2), z2) == FgAbGroup{0, {2, 2}});
}

TEST_CASE("ext groups on pinned examples") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    CHECK(ext_group(z2, z) == z2);
    CHECK(ext_group(z, z2) == FgAbGroup::trivial());
    CHECK(ext_group(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)) == z2);
}

TEST_CASE("tensor with Z/2 on pinned examples") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    CHECK(tensor_z2(z) == z2);
    CHECK(tensor_z2(FgAbGroup::cyclic(3)) == FgAbGroup::trivial());
    CHECK(tensor_z2(direct_sum(z, z2)) == FgAbGroup{0, {2, 2}});
    CHECK(tensor_z2_generators(FgAbGroup{1, {3, 4}}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("hom and ext are additive over direct sums") {
    std::mt19937_64 rng(0xADD5);
    for (int trial = 0; trial < 40; ++trial) {
        FgAbGroup a = random_small_group(rng);
        FgAbGroup b = random_small_group(rng);
        FgAbGroup c = random_small_group(rng);
        CHECK(hom_group(direct_sum(a, b), c) == direct_sum(hom_group(a, c), hom_group(b, c)));
        CHECK(hom_group(a, direct_sum(b, c)) == direct_sum(hom_group(a, b), hom_group(a, c)));
        CHECK(ext_group(direct_sum(a, b), c) == direct_sum(ext_group(a, c), ext_group(b, c)));
        CHECK(ext_group(a, direct_sum(b, c)) == direct_sum(ext_group(a, b), ext_group(a, c)));
    }
}

TEST_CASE("element arithmetic") {
    FgAbGroup g{1, {2, 4}};
    GroupVec v{3, 1, 3};
    CHECK(element_order(g, v) == 0);
    CHECK(element_order(g, GroupVec{0, 1, 2}) == 2);
    CHECK(element_order(g, GroupVec{0, 0, 0}) == 1);
    CHECK(is_zero_element(g, GroupVec{0, 2, 4}));
    CHECK(add_elements(g, GroupVec{1, 1, 3}, GroupVec{1, 1, 3}) == GroupVec{2, 0, 2});
    CHECK(all_elements(FgAbGroup{0, {2, 3}}).size() == 6);
    CHECK(elements_killed_by(FgAbGroup{0, {4}}, 2) == std::vector<GroupVec>{{0}, {2}});
    CHECK_THROWS_AS((void)all_elements(g), std::invalid_argument);
}

TEST_CASE("hom enumeration matches the hom group order") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    CHECK(enumerate_homs(z2, z2).size() == 2);
    CHECK(enumerate_homs(z2, z).size() == 1);
    CHECK(enumerate_homs(direct_sum(z2, z2), z2).size() == 4);
    CHECK_THROWS_AS((void)enumerate_homs(z, z), InfiniteHomError);

    std::mt19937_64 rng(0x4047);
    for (int trial = 0; trial < 25; ++trial) {
        FgAbGroup a = random_small_group(rng);
        FgAbGroup b = random_small_group(rng);
        FgAbGroup h = hom_group(a, b);
        if (!h.is_finite()) {
            CHECK_THROWS_AS((void)enumerate_homs(a, b), InfiniteHomError);
            continue;
        }
        auto homs = enumerate_homs(a, b);
        CHECK(Int(homs.size()) == group_order(h));
        for (const auto& f : homs) CHECK(hom_valid(f));
        // duplicate-free
        for (std::size_t i = 0; i < homs.size() && i < 12; ++i)
            for (std::size_t j = i + 1; j < homs.size() && j < 12; ++j)
                CHECK_FALSE(hom_equal(homs[i], homs[j]));
    }
}

TEST_CASE("hom composition and identity") {
    FgAbGroup z4 = FgAbGroup::cyclic(4);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    GroupHom f{z4, z2, IntMatrix{{1}}};   // reduction mod 2
    GroupHom g{z2, z4, IntMatrix{{2}}};   // injection
    CHECK(hom_valid(f));
    CHECK(hom_valid(g));
    GroupHom gf = hom_compose(g, f);      // Z/4 -> Z/4, x -> 2x
    CHECK(gf.matrix.at(0, 0) == 2);
    CHECK(hom_equal(hom_compose(f, hom_identity(z4)), f));
    CHECK(hom_equal(hom_compose(hom_identity(z2), f), f));
    CHECK(apply_hom(gf, GroupVec{3}) == GroupVec{2});
    CHECK_FALSE(hom_valid(GroupHom{z2, z4, IntMatrix{{1}}}));
}

TEST_CASE("relation lattice matches dense cokernel") {
    std::mt19937_64 rng(0x7A77);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = random_matrix(rng, 6, 5);
        RelationLattice lat(a.rows());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::vector<std::pair<std::size_t, Int>> col;
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (a.at(i, j) != 0) col.emplace_back(i, a.at(i, j));
            lat.add_relation_big(std::move(col));
        }
        std::vector<Int> diag = invariant_factors(a);
        std::vector<Int> factors(a.rows(), Int(0));
        for (std::size_t i = 0; i < diag.size(); ++i)
            if (diag[i] != 0) factors[i] = diag[i];
        CHECK(lat.quotient() == group_from_cyclic_factors(factors));
    }
}

}  // TEST_SUITE
