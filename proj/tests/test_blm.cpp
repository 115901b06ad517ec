#include <doctest.h>

#include <stdexcept>

#include "decat/blm.hpp"

using namespace decat;
using blm::BlmElement;
using blm::CanonicalWord;

TEST_CASE("quantum integers and binomials") {
    CHECK(qint(2) == (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)));
    CHECK(qint(0).is_zero());
    CHECK(qint(-3) == -qint(3));
    CHECK(gauss_binom(2, 1) == qint(2));
    CHECK(gauss_binom(7, 0) == LaurentPoly(1));
    CHECK(gauss_binom(-1, 1) == LaurentPoly(-1));
    CHECK(gauss_binom(1, 2).is_zero());  // contains the factor [0]
    CHECK(gauss_binom(4, 2).at_one() == 6);
    // [-1 choose j] = (-1)^j at q = 1... in fact (-q)^{+-j}; check at q=1
    CHECK(gauss_binom(-1, 2).at_one() == 1);
    CHECK(gauss_binom(-1, 3).at_one() == -1);
}

TEST_CASE("canonical word normalization") {
    CHECK(CanonicalWord::make(1, 1, 0, true).ef == false);  // n = b-a boundary
    CHECK(CanonicalWord::make(2, 0, 5, false).valid());
    CHECK_THROWS_AS(CanonicalWord::make(1, 1, 3, true), std::invalid_argument);
    CHECK(CanonicalWord::make(1, 1, -3, true).ef);
}

TEST_CASE("divided power merge") {
    // E E 1_n = [2] E^(2) 1_n
    BlmElement got = blm::mul(BlmElement::gen_E(1, 2), BlmElement::gen_E(1, 0));
    BlmElement want(0, 4);
    want.add_term(CanonicalWord::make(2, 0, 0, false), qint(2));
    CHECK(got == want);
}

TEST_CASE("EF commutation at n = 1") {
    // E 1_{-1} ... E F 1_1 = F E 1_1 + [1] 1_1
    BlmElement got = blm::mul(BlmElement::gen_E(1, -1), BlmElement::gen_F(1, 1));
    BlmElement want(1, 1);
    want.add_term(CanonicalWord::make(1, 1, 1, false), LaurentPoly(1));
    want.add_term(CanonicalWord::make(0, 0, 1, false), LaurentPoly(1));
    CHECK(got == want);
}

TEST_CASE("unit laws and weight mismatch") {
    BlmElement x = BlmElement::gen_E(2, -1);
    CHECK(blm::mul(BlmElement::unit(x.target()), x) == x);
    CHECK(blm::mul(x, BlmElement::unit(-1)) == x);
    CHECK_THROWS_AS(blm::mul(x, x), std::invalid_argument);
}

TEST_CASE("specialize at q = 1") {
    BlmElement x(0, 4);
    x.add_term(CanonicalWord::make(2, 0, 0, false), qint(2));
    auto q1 = blm::specialize_q1(x);
    CHECK(q1.size() == 1);
    CHECK(q1.begin()->second == 2);
    CHECK(blm::specialize_q1(BlmElement()).empty());
}

TEST_CASE("canonical word enumeration is weight-filtered") {
    auto words = blm::enumerate_words(0, 2, 3);
    CHECK(words.size() == 4);  // b = 0..3, a = b+1
    for (const auto& w : words) {
        CHECK(w.n == 0);
        CHECK(w.target() == 2);
        CHECK(w.valid());
    }
    CHECK(blm::enumerate_words(0, 3, 5).empty());  // odd weight difference
}
