#include <doctest.h>

#include <stdexcept>

#include "decat/current.hpp"

using namespace decat;
using cur::GarlandElement;
using cur::GarlandWord;
using cur::QGen;

namespace {
GarlandElement word_elt(std::vector<cur::DividedPower> f, Partition tau,
                        std::vector<cur::DividedPower> e, int n, Int c = 1) {
    return GarlandElement::word(GarlandWord{std::move(f), std::move(tau), std::move(e), n}, c);
}
}  // namespace

TEST_CASE("commutators of loop generators") {
    // [E_0, F_0] 1_n = n 1_n
    for (int n : {-2, 0, 1, 3}) {
        std::vector<QGen> ef{{QGen::Kind::E, 0}, {QGen::Kind::F, 0}};
        std::vector<QGen> fe{{QGen::Kind::F, 0}, {QGen::Kind::E, 0}};
        GarlandElement got = cur::normal_form(ef, n) - cur::normal_form(fe, n);
        GarlandElement want(n, n);
        if (n != 0) want.add_term(GarlandWord{{}, {}, {}, n}, n);
        CHECK(got == want);
    }
    // [E_1, F_2] 1_n = phi(p_3) 1_n = H_3 1_n
    {
        int n = 2;
        std::vector<QGen> ef{{QGen::Kind::E, 1}, {QGen::Kind::F, 2}};
        std::vector<QGen> fe{{QGen::Kind::F, 2}, {QGen::Kind::E, 1}};
        GarlandElement got = cur::normal_form(ef, n) - cur::normal_form(fe, n);
        CHECK(got == GarlandElement::phi_of(gen_expansion(gen_p(3)), n));
    }
}

TEST_CASE("sorting within blocks") {
    std::vector<QGen> a{{QGen::Kind::E, 0}, {QGen::Kind::E, 1}};
    std::vector<QGen> b{{QGen::Kind::E, 1}, {QGen::Kind::E, 0}};
    CHECK(cur::normal_form(a, 0) == cur::normal_form(b, 0));
    CHECK(cur::normal_form(a, 0) == word_elt({}, {}, {{1, 1}, {0, 1}}, 0));
}

TEST_CASE("divided power regrouping") {
    // E_0 E_0 1_0 = 2 E_0^(2) 1_0
    GarlandElement got =
        cur::mul(GarlandElement::gen_E(0, 1, 2), GarlandElement::gen_E(0, 1, 0));
    CHECK(got == word_elt({}, {}, {{0, 2}}, 0, 2));
    // E_0^(2) E_0 1_0 = 3 E_0^(3) 1_0
    got = cur::mul(GarlandElement::gen_E(0, 2, 2), GarlandElement::gen_E(0, 1, 0));
    CHECK(got == word_elt({}, {}, {{0, 3}}, 0, 3));
}

TEST_CASE("unit and weight checks") {
    GarlandElement x = GarlandElement::gen_F(1, 2, 4);
    CHECK(cur::mul(GarlandElement::unit(x.target()), x) == x);
    CHECK(cur::mul(x, GarlandElement::unit(4)) == x);
    CHECK_THROWS_AS(cur::mul(x, x), std::invalid_argument);
    CHECK_THROWS_AS(
        GarlandElement::word(GarlandWord{{{0, 1}, {1, 1}}, {}, {}, 0}),  // indices increasing
        std::invalid_argument);
}

TEST_CASE("F0 E0 at n=1 rearranged") {
    // E_0 F_0 1_1 = F_0 E_0 1_1 + 1_1
    GarlandElement lhs = cur::mul(GarlandElement::gen_E(0, 1, -1), GarlandElement::gen_F(0, 1, 1));
    GarlandElement want = word_elt({{0, 1}}, {}, {{0, 1}}, 1);
    want.add_term(GarlandWord{{}, {}, {}, 1}, 1);
    CHECK(lhs == want);
}

TEST_CASE("phi and phi_inv") {
    auto c = cur::phi(gen_expansion(gen_p(4)));
    CHECK(c.size() == 1);
    CHECK(c.begin()->first == Partition({4}));
    CHECK(c.begin()->second == 1);
    // phi(e_2) = H_{1,2} = (H_1^2 - H_2)/2
    auto e2 = cur::phi(gen_expansion(gen_e(2)));
    CHECK(e2.at(Partition({1, 1})) == Rat(1, 2));
    CHECK(e2.at(Partition({2})) == Rat(-1, 2));
    // phi_inv on an integral H-monomial combo
    SymElement back = cur::phi_inv({{Partition({2, 1}), 1}});
    CHECK(back == p_monomial_schur(Partition({2, 1})));
}

TEST_CASE("automorphism Phi") {
    GarlandElement e = GarlandElement::gen_E(2, 2, 3);
    CHECK(cur::apply_Phi(e) == GarlandElement::gen_F(2, 2, -3));
    CHECK(cur::apply_Phi(cur::apply_Phi(e)) == e);
    GarlandElement h = GarlandElement::phi_of(gen_expansion(gen_p(3)), 2);
    CHECK(cur::apply_Phi(h) == -GarlandElement::phi_of(gen_expansion(gen_p(3)), -2));
    // phi(s_tau) transforms by p_j -> -p_j, i.e. tau -> tau^t with sign (-1)^{|tau|}
    GarlandElement s21 = GarlandElement::phi_of(SymElement::schur(Partition({2, 1})), 0);
    GarlandElement img = cur::apply_Phi(s21);
    GarlandElement want(0, 0);
    want.add_term(GarlandWord{{}, Partition({2, 1}), {}, 0}, -1);
    CHECK(img == want);
}

TEST_CASE("basis enumeration") {
    auto b1 = cur::enumerate_basis(0, 2, 0, 0);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].e == std::vector<cur::DividedPower>{{0, 1}});
    CHECK(b1[0].f.empty());
    CHECK(b1[0].tau.empty());

    auto b2 = cur::enumerate_basis(4, 4, 0, 0);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].e.empty());

    // E-only sector at loop degree d counts partitions of d with <= a parts
    for (int a = 1; a <= 6; ++a)
        for (int d = 0; d <= 10; ++d) {
            long cnt = 0;
            for (const auto& w : cur::enumerate_basis(0, 2 * a, d, 0))
                if (w.tau.empty() && w.loop_degree() == d) ++cnt;
            CHECK(cnt == count_partitions_max_parts(d, a));
        }
    CHECK_THROWS_AS(cur::enumerate_basis(0, 3, 2, 0), std::invalid_argument);
}

TEST_CASE("integrality of a nontrivial product") {
    // E_1^(2) F_1^(2) 1_0 expands integrally
    GarlandElement x = GarlandElement::gen_E(1, 2, -4);
    GarlandElement y = GarlandElement::gen_F(1, 2, 0);
    GarlandElement got = cur::mul(x, y);
    CHECK(!got.is_zero());
    CHECK(got.source() == 0);
    CHECK(got.target() == 0);
    // loop degree additivity
    for (const auto& [w, c] : got.terms()) CHECK(w.loop_degree() <= 4);
}
