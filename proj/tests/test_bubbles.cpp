#include <doctest.h>

#include <stdexcept>

#include "decat/bubbles.hpp"

using namespace decat;

TEST_CASE("b+ and b- coordinates") {
    // b-(h_1) = -s_1 in b+ coordinates
    CHECK(bub::b_minus(gen_expansion(gen_h(1)), 0).value ==
          -SymElement::schur(Partition({1})));
    // b+(1) is the identity of 1_n
    CHECK(bub::b_plus(SymElement::one(), 3).value == SymElement::one());
    // b-(p_m) = -b+(p_m)
    for (int m = 1; m <= 12; ++m) {
        SymElement pm = gen_expansion(gen_p(m));
        CHECK(bub::b_minus(pm, 0).value == -pm);
    }
}

TEST_CASE("fake bubble series") {
    auto series = bub::fake_bubble_series(2, 8);
    CHECK(series[0].value == SymElement::one());
    CHECK(series[1].value == -SymElement::schur(Partition({1})));
    for (int m = 0; m <= 8; ++m)
        CHECK(series[static_cast<size_t>(m)].value ==
              bub::b_minus(gen_expansion(gen_h(m)), 2).value);
    CHECK_THROWS_AS(bub::fake_bubble_series(0, -1), std::invalid_argument);
}

TEST_CASE("commutator identity equals p_m") {
    CHECK(bub::commutator_identity(1) == SymElement::schur(Partition({1})));
    CHECK(bub::commutator_identity(2) ==
          SymElement::schur(Partition({2})) - SymElement::schur(Partition({1, 1})));
    for (int m = 1; m <= 12; ++m)
        CHECK(bub::commutator_identity(m) == gen_expansion(gen_p(m)));
    CHECK_THROWS_AS(bub::commutator_identity(0), std::invalid_argument);
    CHECK_THROWS_AS(bub::commutator_identity(-3), std::invalid_argument);
}
