#include "doctest.h"

#include "chordal/face.hpp"

using chordal::Face;

TEST_SUITE("complex_core") {
    TEST_CASE("faces are vertex sets with dimension size - 1") {
        const Face f = Face::of({3, 1, 3});
        CHECK(f.size() == 2);
        CHECK(f.dim() == 1);
        CHECK(f.vertices() == std::vector<int>{1, 3});
        CHECK(f.to_string() == "{1,3}");
        CHECK(Face{}.dim() == -1);
        CHECK(Face{}.to_string() == "{}");
        CHECK(Face::of({1, 3}) == Face::of({3, 1}));
        CHECK(Face::range(3) == Face::of({1, 2, 3}));
        CHECK(Face::of({64}).max_vertex() == 64);
    }

    TEST_CASE("labels outside 1..64 are rejected") {
        CHECK_THROWS_AS(Face::of({0}), chordal::InputError);
        CHECK_THROWS_AS(Face::of({65}), chordal::InputError);
    }

    TEST_CASE("k-subsets come in ascending mask order") {
        std::vector<Face> seen;
        chordal::for_each_k_subset(Face::of({1, 3, 4, 6}), 2, [&](Face f) { seen.push_back(f); });
        REQUIRE(seen.size() == 6);
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(seen.front() == Face::of({1, 3}));
        CHECK(seen.back() == Face::of({4, 6}));

        int count = 0;
        chordal::for_each_k_subset(Face::range(5), 0, [&](Face f) {
            CHECK(f.empty());
            ++count;
        });
        CHECK(count == 1);
        chordal::for_each_k_subset(Face::range(3), 4, [&](Face) { ++count; });
        CHECK(count == 1);
    }

    TEST_CASE("all subsets including both ends") {
        int count = 0;
        chordal::for_each_subset(Face::of({2, 5, 7}), [&](Face) { ++count; });
        CHECK(count == 8);
    }

    TEST_CASE("minimal transversals") {
        using chordal::minimal_transversals;
        CHECK(minimal_transversals(std::vector<Face>{}) == std::vector<Face>{Face{}});
        CHECK(minimal_transversals(std::vector<Face>{Face{}}).empty());
        const std::vector<Face> edges{Face::of({1, 2}), Face::of({2, 3})};
        CHECK(minimal_transversals(edges) == std::vector<Face>{Face::of({2}), Face::of({1, 3})});
        const std::vector<Face> triangle{Face::of({1, 2}), Face::of({2, 3}), Face::of({1, 3})};
        CHECK(minimal_transversals(triangle).size() == 3);
    }

    TEST_CASE("maximal and minimal elements") {
        const std::vector<Face> faces{Face::of({1}), Face::of({1, 2}), Face::of({3}), Face::of({1, 2})};
        CHECK(chordal::maximal_elements(faces) == std::vector<Face>{Face::of({1, 2}), Face::of({3})});
        CHECK(chordal::minimal_elements(faces) == std::vector<Face>{Face::of({1}), Face::of({3})});
    }
}
