#include <doctest.h>

#include <stdexcept>

#include "decat/trace.hpp"

using namespace decat;
using tr::PlusElement;
using tr::TraceElement;
using tr::TraceWord;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("compose_plus defining examples") {
    // Ehat^(1) o Ehat^(1) = 2 Ehat^(2) (l = 0)
    PlusElement x = PlusElement::make(1, {}, 2);
    PlusElement y = PlusElement::make(1, {}, 0);
    PlusElement got = tr::compose_plus(x, y);
    CHECK(got.a == 2);
    CHECK(got.coeffs == std::map<Partition, Int>{{{}, 2}});

    // Ehat^(1)_{(1)} o Ehat^(1)_{(0)} = Ehat^(2)_{(1)}
    got = tr::compose_plus(PlusElement::make(1, P({1}), 2), PlusElement::make(1, {}, 0));
    CHECK(got.coeffs == std::map<Partition, Int>{{P({1}), 1}});
    // and in the other order, by rectangle commutativity
    PlusElement other =
        tr::compose_plus(PlusElement::make(1, {}, 2), PlusElement::make(1, P({1}), 0));
    CHECK(other.coeffs == got.coeffs);

    // thickness-0 unit
    PlusElement z = PlusElement::make(2, P({2, 1}), 0);
    CHECK(tr::compose_plus(PlusElement::make(0, {}, z.target()), z) == z);
}

TEST_CASE("rectangle decomposition") {
    // lambda = (1,0) at a=2 decomposes as the single product E_{1}E_{0}
    auto d = tr::rect_decompose(2, P({1}));
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == tr::RectSeq{{1, 1}, {0, 1}});
    CHECK(d.begin()->second == 1);

    // rectangles are atomic
    auto r = tr::rect_decompose(3, P({2, 2, 2}));
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == tr::RectSeq{{2, 3}});

    // round trip on a mixed shape
    for (const Partition& lam : {P({3, 1}), P({2, 2, 1}), P({2, 1, 1})}) {
        int a = lam.length() + 1;
        std::map<Partition, Int> acc;
        for (const auto& [seq, c] : tr::rect_decompose(a, lam))
            for (const auto& [tau, v] : tr::rect_expand(seq)) {
                acc[tau] += c * v;
                if (acc[tau] == 0) acc.erase(tau);
            }
        CHECK(acc == std::map<Partition, Int>{{lam, 1}});
    }

    CHECK_THROWS_AS(tr::rect_recompose({{0, 1}, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("transport dictionary") {
    // unit maps to unit
    CHECK(tr::to_current(TraceElement::unit(5)) == cur::GarlandElement::unit(5));
    CHECK(tr::from_current(cur::GarlandElement::unit(5)) == TraceElement::unit(5));

    // rectangle words map to divided powers (tau empty)
    TraceElement x = TraceElement::word(TraceWord{2, P({3, 3}), {}, 1, P({2}), 0});
    cur::GarlandElement g = tr::to_current(x);
    REQUIRE(g.terms().size() == 1);
    const auto& [w, c] = *g.terms().begin();
    CHECK(c == 1);
    CHECK(w.f == std::vector<cur::DividedPower>{{3, 2}});
    CHECK(w.e == std::vector<cur::DividedPower>{{2, 1}});
    CHECK(tr::from_current(g) == x);

    // bubble part: b+(tau) <-> (-1)^{|tau|} phi(s_{tau^t})
    TraceElement bub = TraceElement::bubble_plus(SymElement::schur(P({1})), 3);
    cur::GarlandElement gb = tr::to_current(bub);
    cur::GarlandElement want(3, 3);
    want.add_term(cur::GarlandWord{{}, P({1}), {}, 3}, -1);
    CHECK(gb == want);
    CHECK(tr::from_current(gb) == bub);

    // degree correspondence: trace degree = 2 * loop degree
    TraceElement y = TraceElement::word(TraceWord{1, P({2}), P({2, 1}), 2, P({1, 1}), -2});
    cur::GarlandElement gy = tr::to_current(y);
    for (const auto& [u, d] : gy.terms()) CHECK(2 * u.loop_degree() == 2 * (2 + 3 + 2));
}

TEST_CASE("round trips on mixed elements") {
    TraceElement x(1, 1);
    x.add_term(TraceWord{1, P({1}), P({2}), 1, P({2}), 1}, 3);
    x.add_term(TraceWord{2, P({2, 1}), {}, 2, P({1, 1}), 1}, -1);
    CHECK(tr::from_current(tr::to_current(x)) == x);
}

TEST_CASE("compose basic laws") {
    TraceElement x = TraceElement::E_hat(1, P({2}), 0);
    CHECK(tr::compose(TraceElement::unit(x.target()), x) == x);
    CHECK(tr::compose(x, TraceElement::unit(0)) == x);
    CHECK_THROWS_AS(tr::compose(x, x), std::invalid_argument);
}

TEST_CASE("E/F commutator instance") {
    // [E_1, F_0] 1_2 = b^-(p_1) 1_2 = -b^+(p_1) 1_2
    int n = 2;
    TraceElement EF = tr::compose(TraceElement::E_hat(1, P({1}), n - 2),
                                  TraceElement::F_hat(1, {}, n));
    TraceElement FE = tr::compose(TraceElement::F_hat(1, {}, n + 2),
                                  TraceElement::E_hat(1, P({1}), n));
    TraceElement got = EF - FE;
    CHECK(got == TraceElement::bubble_minus(gen_expansion(gen_p(1)), n));
    TraceElement expect(n, n);
    expect.add_term(TraceWord{0, {}, P({1}), 0, {}, n}, -1);
    CHECK(got == expect);
}

TEST_CASE("bubble commutator instance") {
    // [b^-(p_1), Ehat] 1_0 = 2 Ehat^(1)_{(1)} 1_0
    int n = 0;
    SymElement p1 = gen_expansion(gen_p(1));
    TraceElement lhs =
        tr::compose(TraceElement::bubble_minus(p1, n + 2), TraceElement::E_hat(1, {}, n)) -
        tr::compose(TraceElement::E_hat(1, {}, n), TraceElement::bubble_minus(p1, n));
    TraceElement want = TraceElement::E_hat(1, P({1}), n);
    want += want;
    CHECK(lhs == want);
}

TEST_CASE("E-before-F basis change") {
    // F E 1_0 = E F 1_0 (H_0 acts by 0)
    TraceElement x0 = tr::compose(TraceElement::F_hat(1, {}, 2), TraceElement::E_hat(1, {}, 0));
    auto ef0 = tr::to_ef_basis(x0);
    REQUIRE(ef0.size() == 1);
    CHECK(ef0.begin()->first == TraceWord{1, {}, {}, 1, {}, 0});
    CHECK(ef0.begin()->second == 1);

    // F E 1_1 = E F 1_1 - 1_1
    TraceElement x1 = tr::compose(TraceElement::F_hat(1, {}, 3), TraceElement::E_hat(1, {}, 1));
    auto ef1 = tr::to_ef_basis(x1);
    REQUIRE(ef1.size() == 2);
    CHECK(ef1.at(TraceWord{1, {}, {}, 1, {}, 1}) == 1);
    CHECK(ef1.at(TraceWord{0, {}, {}, 0, {}, 1}) == -1);

    // bubbles and units are fixed
    auto efu = tr::to_ef_basis(TraceElement::unit(4));
    REQUIRE(efu.size() == 1);
    CHECK(efu.begin()->second == 1);
    TraceElement bb = TraceElement::bubble_plus(SymElement::schur(P({2, 1})), -3);
    auto efb = tr::to_ef_basis(bb);
    REQUIRE(efb.size() == 1);
    CHECK(efb.begin()->first.tau == P({2, 1}));
    CHECK(efb.begin()->second == 1);

    // reconstruction: evaluating each E-before-F word as a transported product
    // recovers the original element
    TraceElement x(1, 1);
    x.add_term(TraceWord{1, P({1}), P({1}), 1, P({2}), 1}, 2);
    x.add_term(TraceWord{0, {}, {}, 0, {}, 1}, -3);
    TraceElement back(1, 1);
    for (const auto& [w, c] : tr::to_ef_basis(x)) {
        TraceElement t = TraceElement::F_hat(w.b, w.mu, w.n);
        t = tr::compose(TraceElement::bubble_plus(SymElement::schur(w.tau), t.target()), t);
        t = tr::compose(TraceElement::E_hat(w.a, w.lam, t.target()), t);
        for (const auto& [tw, tc] : t.terms()) back.add_term(tw, c * tc);
    }
    CHECK(back == x);
}

TEST_CASE("graded dimensions") {
    CHECK(tr::graded_dim(0, 2, -1, 5) == 0);
    CHECK(tr::plus_graded_dim(3, 4) == count_partitions_max_parts(4, 3));
    CHECK(tr::plus_graded_dim(2, -1) == 0);
    // d = 0 with bmax: one word per admissible thickness pair
    CHECK(tr::graded_dim(0, 2, 0, 3) == 4);
    CHECK(tr::graded_dim(0, -4, 0, 1) == 0);  // b <= 1 gives no a >= 0 words
    CHECK(tr::graded_dim(0, -4, 0, 2) == 1);
}
