#include <doctest.h>

#include <stdexcept>

#include "decat/oracles.hpp"
#include "decat/sym.hpp"

using namespace decat;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("schur products, small examples") {
    // s_1 * s_1 = s_2 + s_11 (frozen from the monomial oracle below)
    SymElement s1 = SymElement::schur(P({1}));
    SymElement got = s1 * s1;
    SymElement want = SymElement::schur(P({2})) + SymElement::schur(P({1, 1}));
    CHECK(got == want);

    // s_1 * s_11 = s_21 + s_111
    got = s1 * SymElement::schur(P({1, 1}));
    want = SymElement::schur(P({2, 1})) + SymElement::schur(P({1, 1, 1}));
    CHECK(got == want);

    // unit
    CHECK(SymElement::schur(P({3, 1})) * SymElement::one() == SymElement::schur(P({3, 1})));
}

TEST_CASE("monomial oracle agrees on a hard product") {
    Partition mu({2, 1}), nu({2, 1});
    int k = 6;
    auto prod = oracle::poly_mul(oracle::schur_poly(mu, k), oracle::schur_poly(nu, k));
    auto expect = oracle::schur_decompose(std::move(prod), k);
    CHECK(mul_schur(mu, nu).terms() == expect);
    // s_21^2 contains s_42 once and s_321 twice
    CHECK(expect.at(P({4, 2})) == 1);
    CHECK(expect.at(P({3, 2, 1})) == 2);
}

TEST_CASE("oracle internals: bialternant identity") {
    // a_{lam+delta} = a_delta * schur_poly(lam) in 3 variables
    for (const Partition& lam : {P({2, 1}), P({3}), P({1, 1, 1})}) {
        std::vector<int> ld = lam.padded(3);
        for (int j = 0; j < 3; ++j) ld[static_cast<size_t>(j)] += 2 - j;
        oracle::Poly lhs = oracle::alternant(ld);
        oracle::Poly rhs = oracle::poly_mul(oracle::alternant({2, 1, 0}),
                                            oracle::schur_poly(lam, 3));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generator expansions") {
    CHECK(gen_expansion(gen_p(1)) == SymElement::schur(P({1})));
    CHECK(gen_expansion(gen_e(2)) == SymElement::schur(P({1, 1})));
    CHECK(gen_expansion(gen_h(2)) == SymElement::schur(P({2})));
    // e_{2,1} = p_2 = s_2 - s_11
    SymElement want = SymElement::schur(P({2})) - SymElement::schur(P({1, 1}));
    CHECK(gen_expansion(gen_etj(2, 1)) == want);
    CHECK(gen_expansion(gen_p(2)) == want);
    // e_{1,j} = e_j
    CHECK(gen_expansion(gen_etj(1, 3)) == gen_expansion(gen_e(3)));
    // word products
    CHECK(to_schur({gen_h(1), gen_h(1)}) ==
          SymElement::schur(P({2})) + SymElement::schur(P({1, 1})));
}

TEST_CASE("antipode and omega") {
    SymElement s21 = SymElement::schur(P({2, 1}));
    CHECK(s21.antipode() == -s21);  // self-conjugate, |lambda| = 3
    SymElement x = SymElement::schur(P({3, 1})) + Int(2) * SymElement::schur(P({2}));
    CHECK(x.antipode().antipode() == x);
    CHECK(x.omega().omega() == x);
    for (int m = 1; m <= 6; ++m) {
        SymElement pm = gen_expansion(gen_p(m));
        CHECK(pm.antipode() == -pm);
    }
}

TEST_CASE("wedge product examples") {
    SymElement s1a = SymElement::schur(P({1}), 1);
    CHECK(wedge(1, 1, s1a, s1a).is_zero());
    CHECK(wedge(2, 1, SymElement::schur(P({2, 2}), 2), s1a) ==
          SymElement::schur(P({1, 1, 1}), 3));
    CHECK(wedge(1, 1, SymElement::one(1), SymElement::one(1)).is_zero());
}

TEST_CASE("truncation") {
    CHECK(SymElement::schur(P({1, 1})).truncate(1).is_zero());
    CHECK(SymElement::schur(P({2})).truncate(1) == SymElement::schur(P({2}), 1));
    SymElement s1 = SymElement::schur(P({1}));
    CHECK((s1 * s1).truncate(1) == SymElement::schur(P({2}), 1));
}

TEST_CASE("p expansion over Q") {
    // s_2 = (p_1^2 + p_2)/2, s_11 = (p_1^2 - p_2)/2
    auto c2 = p_expand(SymElement::schur(P({2})));
    CHECK(c2.at(P({1, 1})) == Rat(1, 2));
    CHECK(c2.at(P({2})) == Rat(1, 2));
    auto c11 = p_expand(SymElement::schur(P({1, 1})));
    CHECK(c11.at(P({1, 1})) == Rat(1, 2));
    CHECK(c11.at(P({2})) == Rat(-1, 2));
    // reconstruction: sum c_mu p_mu = x
    SymElement x = SymElement::schur(P({3, 1})) - Int(2) * SymElement::schur(P({2, 2}));
    auto coords = p_expand(x);
    SymElement back;
    Rat denom_lcm(1);
    std::map<Partition, Rat> check;
    for (const auto& [mu, c] : coords) {
        SymElement term = p_monomial_schur(mu);
        for (const auto& [lam, v] : term.terms()) check[lam] += c * Rat(v);
    }
    for (const auto& [lam, v] : x.terms()) {
        CHECK(check[lam] == Rat(v));
        check.erase(lam);
    }
    for (const auto& [lam, v] : check) CHECK(v == 0);
}

TEST_CASE("box duals") {
    BoxDuals d = box_duals(P({2, 1}), 2, 2);
    CHECK(d.conjugate == P({2, 1}));
    CHECK(d.complement == P({1}));
    CHECK(d.hat == P({1}));
    CHECK_THROWS_AS(box_duals(P({3}), 2, 2), std::invalid_argument);
}
