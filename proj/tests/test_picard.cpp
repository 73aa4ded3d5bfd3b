#include "doctest.h"

#include "rstft/picard.hpp"

#include <random>

using namespace rstft;

namespace {

FgAbGroup random_finite_group(std::mt19937_64& rng, long long max_order) {
    std::uniform_int_distribution<long long> fac(1, max_order);
    std::vector<Int> factors;
    long long order = 1;
    for (int i = 0; i < 3; ++i) {
        long long f = fac(rng);
        if (f > 1 && order * f <= max_order) {
            factors.emplace_back(f);
            order *= f;
        }
    }
    return group_from_cyclic_factors(factors);
}

PicardData random_finite_target(std::mt19937_64& rng, long long max_order) {
    FgAbGroup pi0 = random_finite_group(rng, max_order);
    FgAbGroup pi1 = random_finite_group(rng, max_order);
    auto two_torsion = elements_killed_by(pi1, 2);
    std::uniform_int_distribution<std::size_t> pick(0, two_torsion.size() - 1);
    std::vector<Pi1Elem> k;
    for (std::size_t i = 0; i < tensor_z2_generators(pi0).size(); ++i)
        k.push_back(Pi1Elem::finite_value(two_torsion[pick(rng)]));
    return make_picard_data(std::move(pi0), Pi1Group::finitely(std::move(pi1)), std::move(k));
}

// Independent count of commuting pairs (f0, f1), written directly against the
// defining square rather than through classify_functors' grouping.
long long count_commuting_pairs(const PicardData& src, const PicardData& tgt) {
    auto f0s = enumerate_homs(src.pi0, tgt.pi0);
    auto f1s = enumerate_homs(src.pi1.finite_part, tgt.pi1.finite_part);
    auto src_idx = tensor_z2_generators(src.pi0);
    auto tgt_idx = tensor_z2_generators(tgt.pi0);
    long long count = 0;
    for (const auto& f0 : f0s)
        for (const auto& f1 : f1s) {
            bool ok = true;
            for (std::size_t x = 0; x < src_idx.size() && ok; ++x) {
                GroupVec lhs = apply_hom(f1, src.k[x].coords);
                GroupVec rhs = zero_element(tgt.pi1.finite_part);
                for (std::size_t y = 0; y < tgt_idx.size(); ++y) {
                    Int bit = f0.matrix.at(tgt_idx[y], src_idx[x]) % 2;
                    if (bit != 0) rhs = add_elements(tgt.pi1.finite_part, rhs, tgt.k[y].coords);
                }
                ok = lhs == rhs;
            }
            if (ok) ++count;
        }
    return count;
}

}  // namespace

TEST_SUITE("picard") {

TEST_CASE("bordism groupoid data") {
    PicardData b0 = bord_picard_data(RParam(0));
    CHECK(b0.pi0 == FgAbGroup::cyclic(2));
    CHECK(b0.pi1 == Pi1Group::finitely(FgAbGroup::cyclic(2)));
    REQUIRE(b0.k.size() == 1);
    CHECK(b0.k[0].coords == GroupVec{1});  // identity on Z/2

    PicardData b10 = bord_picard_data(RParam(10));
    CHECK(b10.pi1 == Pi1Group::finitely(FgAbGroup{1, {2}}));
    REQUIRE(b10.k.size() == 1);
    CHECK(b10.k[0].coords == GroupVec{0, 1});  // x -> (0, x)

    PicardData b9 = bord_picard_data(RParam(9));
    CHECK(b9.pi0 == FgAbGroup::trivial());
    CHECK(b9.pi1 == Pi1Group::finitely(FgAbGroup::free_group(1)));
    CHECK(b9.k.empty());
}

TEST_CASE("line and super line") {
    PicardData s = sline(), l = line();
    for (const PicardData* d : {&s, &l}) {
        CHECK(d->pi0 == FgAbGroup::cyclic(2));
        CHECK(d->pi1 == Pi1Group::circle());
        REQUIRE(d->k.size() == 1);
    }
    CHECK(s.k[0].sign == -1);
    CHECK(l.k[0].sign == +1);
}

TEST_CASE("k values of order > 2 are rejected") {
    CHECK_THROWS_AS(make_picard_data(FgAbGroup::cyclic(2),
                                     Pi1Group::finitely(FgAbGroup::cyclic(4)),
                                     {Pi1Elem::finite_value({1})}),
                    KInvariantError);
    CHECK_THROWS_AS(make_picard_data(FgAbGroup::cyclic(2), Pi1Group::circle(), {}),
                    KInvariantError);  // missing value
    CHECK_NOTHROW(make_picard_data(FgAbGroup::cyclic(2),
                                   Pi1Group::finitely(FgAbGroup::cyclic(4)),
                                   {Pi1Elem::finite_value({2})}));
}

TEST_CASE("classification of functors into super lines") {
    CHECK(classify_functors(bord_picard_data(RParam(3)), sline()).to_string() == "C*");
    CHECK(classify_functors(bord_picard_data(RParam(4)), sline()).to_string() == "Z/2 x C*");
    CHECK(classify_functors(bord_picard_data(RParam(0)), sline()).to_string() == "Z/2");
    // the answer only sees the homotopy groups of the target
    CHECK(classify_functors(bord_picard_data(RParam(0)), line()).to_string() == "Z/2");
    for (long long r = 0; r <= 12; ++r) {
        std::string expected = r == 0 ? "Z/2" : (r % 2 == 0 ? "Z/2 x C*" : "C*");
        CHECK(classify_functors(bord_picard_data(RParam(r)), sline()).to_string() == expected);
        CHECK(classify_rspin_tfts(RParam(r), sline()).to_string() == expected);
    }
}

TEST_CASE("classification table on pinned custom targets") {
    PicardData t = make_picard_data(FgAbGroup::cyclic(4),
                                    Pi1Group::finitely(FgAbGroup::cyclic(3)),
                                    {Pi1Elem::finite_value({0})});
    CHECK(classify_rspin_tfts(RParam(0), t) == expr_from_group(FgAbGroup::cyclic(2)));
    CHECK(classify_rspin_tfts(RParam(7), t) == expr_from_group(FgAbGroup::cyclic(3)));
    CHECK(classify_rspin_tfts(RParam(2), sline()).to_string() == "Z/2 x C*");

    // mixed circle-times-finite target
    PicardData mixed = make_picard_data(
        FgAbGroup::cyclic(2), Pi1Group::circle_times(FgAbGroup::cyclic(4)),
        {Pi1Elem{-1, {2}}});
    CHECK(classify_rspin_tfts(RParam(5), mixed).to_string() == "Z/4 x C*");
    CHECK(classify_rspin_tfts(RParam(0), mixed).to_string() == "Z/2 x Z/2");
    CHECK(classify_functors(bord_picard_data(RParam(5)), mixed).to_string() == "Z/4 x C*");
}

TEST_CASE("table agrees with direct enumeration on random finite targets") {
    std::mt19937_64 rng(0xF1CA7D);
    for (int trial = 0; trial < 30; ++trial) {
        PicardData tgt = random_finite_target(rng, 16);
        for (long long r : {0LL, 3LL, 4LL, 7LL, 8LL, 12LL}) {
            FormalGroupExpr table = classify_rspin_tfts(RParam(r), tgt);
            FormalGroupExpr enumerated = classify_functors(bord_picard_data(RParam(r)), tgt);
            CHECK(table == enumerated);
        }
    }
}

TEST_CASE("pair counts match the classified group order") {
    std::mt19937_64 rng(0xC0157);
    for (int trial = 0; trial < 12; ++trial) {
        PicardData tgt = random_finite_target(rng, 12);
        for (long long r : {0LL, 3LL, 4LL}) {
            PicardData src = bord_picard_data(RParam(r));
            FormalGroupExpr cls = classify_functors(src, tgt);
            REQUIRE(cls.circle_factors == 0);
            Int expected = count_commuting_pairs(src, tgt) *
                           group_order(ext_group(src.pi0, tgt.pi1.finite_part));
            CHECK(group_order(cls.finite) == expected);
        }
    }
}

TEST_CASE("unsupported classifications are reported distinctly") {
    // infinite Hom into a finitely generated target without circle factor
    PicardData z_target = make_picard_data(
        FgAbGroup::trivial(), Pi1Group::finitely(FgAbGroup::free_group(1)), {});
    CHECK_THROWS_AS((void)classify_functors(bord_picard_data(RParam(4)), z_target),
                    UnsupportedClassificationError);
    // symbolic source
    CHECK_THROWS_AS((void)classify_functors(sline(), sline()), UnsupportedClassificationError);
}

TEST_CASE("expression canonicalisation") {
    FormalGroupExpr e = expr_product(expr_circle(), expr_from_group(FgAbGroup{1, {2}}));
    CHECK(e.to_string() == "Z x Z/2 x C*");
    CHECK(e.factor_strings() == std::vector<std::string>{"Z", "Z/2", "C*"});
    CHECK(expr_from_group(FgAbGroup::trivial()).to_string() == "0");
    CHECK(expr_product(expr_from_group(FgAbGroup::cyclic(2)),
                       expr_from_group(FgAbGroup::cyclic(3)))
              .to_string() == "Z/6");
}

}  // TEST_SUITE
