#include "doctest.h"

#include "rstft/bordism.hpp"
#include "rstft/skk.hpp"

using namespace rstft;

TEST_SUITE("bordism") {

TEST_CASE("circle bordism group on pinned cases") {
    CHECK(pi0_presentation(RParam(3), 2, 4) == FgAbGroup::trivial());
    CHECK(pi0_presentation(RParam(4), 2, 4) == FgAbGroup::cyclic(2));
    CHECK(pi0_presentation(RParam(0), 2, 4, 6) == FgAbGroup::cyclic(2));
}

TEST_CASE("circle bordism group matches the parity table") {
    for (long long r = 0; r <= 8; ++r) {
        FgAbGroup expected = r % 2 == 0 ? FgAbGroup::cyclic(2) : FgAbGroup::trivial();
        CHECK(pi0_presentation(RParam(r)) == expected);
    }
}

TEST_CASE("presentation saturates beyond (2,4)") {
    for (long long r = 0; r <= 8; ++r) {
        FgAbGroup base = pi0_presentation(RParam(r), 2, 4);
        CHECK(pi0_presentation(RParam(r), 3, 5) == base);
        CHECK(pi0_presentation(RParam(r), 3, 6) == base);
    }
    for (long long w = 2; w <= 10; ++w)
        CHECK(pi0_presentation(RParam(0), 2, 4, w) == FgAbGroup::cyclic(2));
}

TEST_CASE("classes of circles") {
    CHECK(circle_class(0, RParam(2)) == 1);  // the generator
    for (long long r : {0LL, 2LL, 5LL, 8LL}) CHECK(circle_class(1, RParam(r)) == 0);
    CHECK(circle_class(5, RParam(8)) == 0);
    CHECK(circle_class(-2, RParam(0)) == 1);
    for (long long k = 0; k < 9; ++k) CHECK(circle_class(k, RParam(9)) == 0);
}

TEST_CASE("duality: a circle and its reverse cancel") {
    for (long long r = 0; r <= 12; ++r)
        for (long long k = -6; k <= 6; ++k)
            CHECK((circle_class(k, RParam(r)) + circle_class(-k, RParam(r))) % 2 == 0);
}

TEST_CASE("k-invariant is compatible with the circle class") {
    for (long long r = 0; r <= 12; r += 2)
        for (long long k = r == 0 ? -6 : 0; k <= (r == 0 ? 6 : r - 1); ++k) {
            SkkClass kc = k_invariant_circle(k, RParam(r));
            // the table map x -> (0, x) on the class of the circle
            CHECK(kc.j == 0);
            CHECK(kc.eps == circle_class(k, RParam(r)));
        }
}

}  // TEST_SUITE
