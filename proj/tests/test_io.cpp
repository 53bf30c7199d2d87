#include "doctest.h"

#include "chordal/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace chordal;
using namespace chordal::testing;

TEST_SUITE("io") {
    TEST_CASE("complex JSON") {
        const Json j = to_json(basic_complex());
        CHECK(j.dump() == R"({"n":5,"facets":[[1,2,3,4],[2,5],[1,4,5]]})");
        CHECK(complex_from_json(j) == basic_complex());
        CHECK(to_json(SimplicialComplex::void_complex(2)).dump() == R"({"n":2,"facets":null})");
        CHECK(to_json(SimplicialComplex::empty_complex(2)).dump() == R"({"n":2,"facets":[[]]})");
        CHECK(complex_from_json(Json::parse(R"({"n":2,"facets":[[]]})")).is_empty_complex());
    }

    TEST_CASE("complex JSON keeps a partial ground set") {
        const SimplicialComplex w = induced(basic_complex(), F({1, 4, 5}));
        const Json j = to_json(w);
        CHECK(j.dump() == R"({"n":5,"vertices":[1,4,5],"facets":[[1,4,5]]})");
        CHECK(complex_from_json(j) == w);
    }

    TEST_CASE("malformed complex JSON") {
        CHECK_THROWS_AS(complex_from_json(Json::parse("[1,2]")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets":[]})")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3})")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3,"facets":[[1,4]]})")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3,"facets":[["a"]]})")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":65,"facets":[]})")), InputError);
        CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3,"vertices":[1],"facets":[[2]]})")), InputError);
    }

    TEST_CASE("certificate JSON") {
        const FreeSequence seq{FreeSequence::Kind::SimplicialOrder, 2, {F({1, 5}), F({1, 2}), F({1, 3}), F({2, 3})}};
        const Json j = to_json(seq);
        CHECK(j.dump() == R"({"kind":"simplicial_order","d":2,"faces":[[1,5],[1,2],[1,3],[2,3]]})");
        CHECK(sequence_from_json(j) == seq);
        const FreeSequence col{FreeSequence::Kind::Collapse, 1, {F({3})}};
        CHECK(sequence_from_json(to_json(col)) == col);
        CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"kind":"x","d":1,"faces":[]})")), InputError);
        CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"kind":"collapse","faces":[]})")), InputError);
    }

    TEST_CASE("Betti table JSON") {
        BettiTable t(Field::char0());
        t.add(0, 2, 3);
        t.add(1, 3, 2);
        t.add(2, 4, 0);
        CHECK(to_json(t).dump() ==
              R"({"field":"char0","entries":[{"i":0,"j":2,"beta":3},{"i":1,"j":3,"beta":2}]})");
    }

    TEST_CASE("ideal text") {
        const SquarefreeIdeal i = parse_squarefree_ideal("n=5\n# example\nx3 x5\nx1*x2*x5\n  x2 x4 x5  \n\n");
        CHECK(i.n() == 5);
        CHECK(i.generators() == std::vector<Face>{F({1, 2, 5}), F({3, 5}), F({2, 4, 5})});
        CHECK(format_ideal(i) == "n=5\nx1*x2*x5\nx3*x5\nx2*x4*x5\n");
        CHECK(parse_squarefree_ideal(format_ideal(i)) == i);

        CHECK(parse_squarefree_ideal("x1 x3\n").n() == 3);
        CHECK(parse_squarefree_ideal("n=2\n1\n").generators() == std::vector<Face>{Face{}});
        CHECK(parse_squarefree_ideal("n=4\n").is_zero());
    }

    TEST_CASE("ideal text errors") {
        CHECK_THROWS_AS(parse_squarefree_ideal("x1^2\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("x1 x1\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("y1\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("n=2\nx3\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("x1\nn=2\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("n=99\n"), InputError);
        CHECK_THROWS_AS(parse_squarefree_ideal("x0\n"), InputError);
    }

    TEST_CASE("monomial ideal text") {
        const MonomialIdeal j = parse_monomial_ideal("n=2\nx1^2\nx1*x2\n");
        CHECK(j.n() == 2);
        CHECK(j.generators() == std::vector<Monomial>{Monomial({1, 1}), Monomial({2, 0})});
        CHECK_THROWS_AS(parse_monomial_ideal("x1^\n"), InputError);
    }

    TEST_CASE("property: JSON and text round trips") {
        Rng rng(kSeedComplexes + 400);
        for (int k = 0; k < 200; ++k) {
            const int n = uniform(rng, 1, 10);
            const SimplicialComplex g = random_mixed_complex(rng, n);
            CHECK(complex_from_json(Json::parse(to_json(g).dump())) == g);
            const SquarefreeIdeal i = random_ideal(rng, n);
            CHECK(parse_squarefree_ideal(format_ideal(i)) == i);
        }
    }
}
