#include <doctest.h>

#include <stdexcept>

#include "decat/json_io.hpp"

using namespace decat;
using io::json;

TEST_CASE("sym element round trip and shorthand") {
    SymElement x = Int(3) * SymElement::schur(Partition({2, 1})) - SymElement::schur(Partition{});
    json j = io::sym_to_json(x);
    CHECK(io::sym_from_json(j) == x);
    // bare partition-list shorthand: coefficients 1
    SymElement y = io::sym_from_json(json::parse("[[1],[2,1]]"));
    CHECK(y == SymElement::schur(Partition({1})) + SymElement::schur(Partition({2, 1})));
    // big coefficients survive as strings
    SymElement big;
    big.add_term(Partition({1}), Int("123456789012345678901234567890"));
    CHECK(io::sym_from_json(io::sym_to_json(big)) == big);
}

TEST_CASE("determinism of serialization") {
    SymElement x = SymElement::schur(Partition({3})) + SymElement::schur(Partition({1, 1, 1}));
    CHECK(io::sym_to_json(x).dump() == io::sym_to_json(x).dump());
    cur::GarlandElement g = cur::GarlandElement::gen_E(1, 2, 0);
    CHECK(io::garland_to_json(g).dump() == io::garland_to_json(g).dump());
}

TEST_CASE("garland and trace round trips") {
    cur::GarlandElement g(0, 2);
    g.add_term(cur::GarlandWord{{{1, 1}}, Partition({2}), {{0, 2}}, 0}, -5);
    CHECK(io::garland_from_json(io::garland_to_json(g)) == g);

    tr::TraceElement t(1, 1);
    t.add_term(tr::TraceWord{1, Partition({1}), Partition({2}), 1, Partition({3}), 1}, 7);
    CHECK(io::trace_from_json(io::trace_to_json(t)) == t);
}

TEST_CASE("blm round trip") {
    blm::BlmElement x(0, 2);
    x.add_term(blm::CanonicalWord::make(1, 0, 0, false), qint(2));
    CHECK(io::blm_from_json(io::blm_to_json(x)) == x);
}

TEST_CASE("category from JSON: A2 poset") {
    json desc = json::parse(R"({
      "objects": ["x", "y"],
      "homs": {
        "x->x": {"rank": 1, "basis": ["idx"]},
        "y->y": {"rank": 1, "basis": ["idy"]},
        "x->y": {"rank": 1, "basis": ["f"]}
      },
      "compose": [],
      "identities": {"x": "idx", "y": "idy"}
    })");
    hh::FinLinCat C = io::category_from_json(desc);
    CHECK_NOTHROW(C.validate());
    auto t = hh::trace0(C);
    CHECK(t.h.free_rank == 2);
    CHECK(t.h.torsion.empty());
}

TEST_CASE("category from JSON: one object, End = Z") {
    json desc = json::parse(R"({
      "objects": ["pt"],
      "homs": {"pt->pt": {"rank": 1, "basis": ["e"]}},
      "compose": [{"g": "e", "f": "e", "result": [{"basis": "e", "coeff": "1"}]}],
      "identities": {"pt": "e"}
    })");
    hh::FinLinCat C = io::category_from_json(desc);
    CHECK_NOTHROW(C.validate());
    auto H = hh::hochschild(C, 5);
    CHECK(H[0].free_rank == 1);
    for (size_t i = 1; i < H.size(); ++i) CHECK(H[i].free_rank == 0);
}

TEST_CASE("category JSON errors") {
    // rank disagrees with basis size
    json bad = json::parse(R"({
      "objects": ["x"],
      "homs": {"x->x": {"rank": 2, "basis": ["e"]}},
      "identities": {"x": "e"}
    })");
    CHECK_THROWS_AS(io::category_from_json(bad), std::invalid_argument);
    // broken structure constants: f o id != f is caught by validate()
    json broken = json::parse(R"({
      "objects": ["x", "y"],
      "homs": {
        "x->x": {"rank": 1, "basis": ["idx"]},
        "y->y": {"rank": 1, "basis": ["idy"]},
        "x->y": {"rank": 1, "basis": ["f"]}
      },
      "compose": [{"g": "f", "f": "idx", "result": []}],
      "identities": {"x": "idx", "y": "idy"}
    })");
    hh::FinLinCat C = io::category_from_json(broken);
    CHECK_THROWS_AS(C.validate(), std::runtime_error);
}
