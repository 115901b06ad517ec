#include <doctest.h>

#include <stdexcept>

#include "decat/partition.hpp"

using namespace decat;

TEST_CASE("partition construction and invariants") {
    CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition({2, 2, 1}).size() == 5);
    CHECK(Partition({2, 2, 1}).length() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate, complement, hat") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 1}).complement(2, 2) == Partition({1}));
    CHECK(Partition({2, 1}).hat(2, 2) == Partition({1}));
    CHECK(Partition{}.complement(2, 3) == Partition({3, 3}));
    CHECK(Partition{}.hat(2, 3) == Partition({2, 2, 2}));
    CHECK(Partition({3, 3}).complement(2, 3) == Partition{});
    CHECK_THROWS_AS(Partition({4}).complement(2, 3), std::invalid_argument);
}

TEST_CASE("lexicographic order") {
    CHECK(Partition({2}) > Partition({1, 1}));
    CHECK(Partition({2, 1}) > Partition({2}));
    CHECK(Partition({3, 1}) < Partition({3, 2}));
    CHECK(Partition{} < Partition({1}));
}

TEST_CASE("straightening") {
    SUBCASE("already a partition") {
        Straightened s = straighten({2, 1});
        CHECK(!s.zero);
        CHECK(s.sign == 1);
        CHECK(s.lambda == Partition({2, 1}));
    }
    SUBCASE("one transposition") {
        // (0,2) + (1,0) = (1,2) -> sorted (2,1), one swap, lambda = (1,1)
        Straightened s = straighten({0, 2});
        CHECK(!s.zero);
        CHECK(s.sign == -1);
        CHECK(s.lambda == Partition({1, 1}));
    }
    SUBCASE("vanishing") {
        CHECK(straighten({0, 1}).zero);  // (0,1)+(1,0) = (1,1)
    }
    SUBCASE("entry bound") {
        CHECK_THROWS_AS(straighten({-2, 0}), std::invalid_argument);
        CHECK(is_quasi_index({-1, 0}));
        CHECK(!is_quasi_index({0, -2}));
    }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of_max_parts(6, 2).size() == 4);  // 6, 51, 42, 33
    CHECK(partitions_in_box(2, 2).size() == 6);        // 0,1,2,11,21,22
    CHECK(count_partitions_max_parts(6, 2) == 4);
    CHECK(count_partitions_max_parts(10, 10) == 42);
    CHECK(count_partitions_max_parts(0, 0) == 1);
    CHECK(count_partitions_max_parts(3, 0) == 0);
}
