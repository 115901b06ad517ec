#include <doctest.h>

#include <stdexcept>

#include "decat/hochschild.hpp"

using namespace decat;
using hh::Combo;
using hh::FinLinCat;
using hh::IntMatrix;

namespace {

FinLinCat a2_poset() {
    FinLinCat C;
    C.add_object("x");
    C.add_object("y");
    C.set_hom(0, 0, {"idx"});
    C.set_hom(1, 1, {"idy"});
    C.set_hom(0, 1, {"f"});
    C.set_identity(0, {{0, 1}});
    C.set_identity(1, {{0, 1}});
    C.default_identity_compositions();
    return C;
}

IntMatrix from_rows(std::vector<std::vector<int>> rows) {
    IntMatrix m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("smith normal form") {
    IntMatrix A = from_rows({{2, 4}, {6, 8}});
    auto s = hh::snf(A, true, hh::Pivot::MinAbs);
    CHECK(s.rank == 2);
    CHECK(s.diag == std::vector<Int>{2, 4});
    IntMatrix UAV = s.U.mul(A).mul(s.V);
    CHECK(UAV.at(0, 0) == 2);
    CHECK(UAV.at(1, 1) == 4);
    CHECK(UAV.at(0, 1) == 0);
    CHECK(UAV.at(1, 0) == 0);

    auto s2 = hh::snf(A, false, hh::Pivot::FirstNonzero);
    CHECK(s2.diag == s.diag);

    // divisibility chain on a matrix that needs the fix-up step
    IntMatrix B = from_rows({{2, 0}, {0, 3}});
    auto sb = hh::snf(B, false, hh::Pivot::MinAbs);
    CHECK(sb.diag == std::vector<Int>{1, 6});
}

TEST_CASE("homology of small complexes") {
    // 0 -> Z --2--> Z -> 0: H_0 = Z/2
    IntMatrix d_out(0, 1);
    IntMatrix d_in = from_rows({{2}});
    auto h = hh::homology_at(d_out, d_in);
    CHECK(h.free_rank == 0);
    CHECK(h.torsion == std::vector<Int>{2});
    auto h2 = hh::homology_via_quotient(d_out, d_in);
    CHECK(h == h2);

    // Z --(0 1)--> Z^2 --(1;0)... ker/im with free part
    IntMatrix dout = from_rows({{1, 0}});
    IntMatrix din = from_rows({{0}, {3}});
    auto k = hh::homology_at(dout, din);
    CHECK(k.free_rank == 0);
    CHECK(k.torsion == std::vector<Int>{3});
    CHECK(hh::homology_via_quotient(dout, din) == k);
}

TEST_CASE("category validation") {
    FinLinCat C = a2_poset();
    CHECK_NOTHROW(C.validate());
    // break f o id_x
    FinLinCat Bad = a2_poset();
    Bad.set_compose({0, 1, 0}, {0, 0, 0}, {});
    CHECK_THROWS_WITH_AS(Bad.validate(),
                         doctest::Contains("identity law fails"), std::runtime_error);
    try {
        Bad.validate();
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("f") != std::string::npos);
    }
}

TEST_CASE("trace of the A2 poset") {
    FinLinCat C = a2_poset();
    auto t = hh::trace0(C);
    CHECK(t.h.free_rank == 2);
    CHECK(t.h.torsion.empty());
    // class_of(id_x) and class_of(id_y) are distinct and nonzero
    auto cx = t.class_of_vector(hh::endo_vector(C, t, 0, {{0, 1}}));
    auto cy = t.class_of_vector(hh::endo_vector(C, t, 1, {{0, 1}}));
    CHECK(cx != cy);
    std::vector<Int> zero(static_cast<size_t>(t.c0_rank), 0);
    CHECK(cx != t.class_of_vector(zero));
}

TEST_CASE("hochschild of the A2 poset") {
    auto H = hh::hochschild(a2_poset(), 4);
    REQUIRE(H.size() == 4);
    CHECK(H[0].free_rank == 2);
    for (size_t i = 1; i < H.size(); ++i) {
        CHECK(H[i].free_rank == 0);
        CHECK(H[i].torsion.empty());
    }
}

TEST_CASE("upper triangular recognition") {
    auto tri = hh::check_upper_triangular(a2_poset());
    CHECK(tri.upper_triangular);
    REQUIRE(tri.order.size() == 2);
    CHECK(tri.order[0] == 0);

    FinLinCat Cyc;
    Cyc.add_object("x");
    Cyc.add_object("y");
    Cyc.set_hom(0, 0, {"1x"});
    Cyc.set_hom(1, 1, {"1y"});
    Cyc.set_hom(0, 1, {"f"});
    Cyc.set_hom(1, 0, {"g"});
    Cyc.set_identity(0, {{0, 1}});
    Cyc.set_identity(1, {{0, 1}});
    Cyc.default_identity_compositions();
    Cyc.set_compose({1, 0, 0}, {0, 1, 0}, {});
    Cyc.set_compose({0, 1, 0}, {1, 0, 0}, {});
    auto t2 = hh::check_upper_triangular(Cyc);
    CHECK(!t2.upper_triangular);
    CHECK(t2.cycle.size() == 2);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(hh::bar_complex(a2_poset(), 5, 3), std::runtime_error);
}

TEST_CASE("matrix trace on diagonal blocks") {
    FinLinCat C = a2_poset();
    auto t = hh::trace0(C);
    // diag(id_x, id_y): [id_x] + [id_y]
    auto got = hh::matrix_trace(C, t, {0, 1}, {{{{0, 1}}, {}}, {{{0, 1}}, {{0, 1}}}});
    std::vector<Int> v(static_cast<size_t>(t.c0_rank), 0);
    auto a = hh::endo_vector(C, t, 0, {{0, 1}});
    auto b = hh::endo_vector(C, t, 1, {{0, 1}});
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    CHECK(got == t.class_of_vector(v));
    // zero matrix
    auto z = hh::matrix_trace(C, t, {0, 1}, {{{}, {}}, {{}, {}}});
    CHECK(z == t.class_of_vector(std::vector<Int>(static_cast<size_t>(t.c0_rank), 0)));
    CHECK_THROWS_AS(hh::matrix_trace(C, t, {0, 1}, {{{}}}), std::invalid_argument);
}

TEST_CASE("endo category extraction") {
    FinLinCat C = a2_poset();
    FinLinCat E = hh::endo_category(C, 0);
    CHECK(E.num_objects() == 1);
    CHECK(E.hom_rank(0, 0) == 1);
    CHECK_NOTHROW(E.validate());
}
