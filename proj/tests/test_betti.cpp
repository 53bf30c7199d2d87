#include "doctest.h"

#include <sstream>

#include "chordal/betti.hpp"
#include "chordal/chordality.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace chordal;
using namespace chordal::testing;

namespace {

SquarefreeIdeal I(int n, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<Face> faces;
    for (auto g : gens) faces.push_back(Face::of(g));
    return SquarefreeIdeal(n, std::move(faces));
}

using Entries = std::map<BettiTable::Key, std::uint64_t>;

const Field kFields[] = {Field::gf2(), Field::char0(), Field::gfp(3)};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace

TEST_SUITE("betti") {
    TEST_CASE("reduced homology") {
        CHECK(reduced_homology_dims(hollow_tetrahedron(), Field::gf2()) == std::vector<std::uint64_t>{0, 0, 0, 1});
        for (Field k : kFields)
            CHECK(reduced_homology_dims(C(3, {{1}, {2}, {3}}), k) == std::vector<std::uint64_t>{0, 2});
        CHECK(reduced_homology_dims(SimplicialComplex::empty_complex(2), Field::char0()) == std::vector<std::uint64_t>{1});
        CHECK(reduced_homology_dims(SimplicialComplex::void_complex(2), Field::gf2()) == std::vector<std::uint64_t>{0});
        CHECK(reduced_homology_dims(four_cycle(), Field::char0()) == std::vector<std::uint64_t>{0, 0, 1});
        CHECK(reduced_homology_dims(dunce_hat(), Field::gf2()) == std::vector<std::uint64_t>{0, 0, 0, 0});
    }

    TEST_CASE("Betti table examples") {
        CHECK(betti_table(I(2, {{1, 2}})).entries() == Entries{{{0, 2}, 1}});
        for (Field k : kFields) {
            CHECK(betti_table(I(3, {{1, 2}, {1, 3}, {2, 3}}), k).entries() == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
            CHECK(betti_table(I(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), k).entries() ==
                  Entries{{{0, 2}, 6}, {{1, 3}, 8}, {{2, 4}, 3}});
        }
        CHECK(betti_table(I(1, {{1}})).entries() == Entries{{{0, 1}, 1}});
        CHECK(betti_table(I(4, {{1, 2}, {3, 4}})).entries() == Entries{{{0, 2}, 2}, {{1, 4}, 1}});
        CHECK(betti_table(I(3, {{1}, {2}, {3}})).entries() == Entries{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
        CHECK(betti_table(I(3, {{1}}), Field::char0()).field() == Field::char0());
        CHECK_THROWS_AS(betti_table(SquarefreeIdeal::zero(3)), PreconditionError);
    }

    TEST_CASE("regularity") {
        CHECK(regularity(betti_table(I(3, {{1, 2}, {1, 3}, {2, 3}}))) == 2);
        CHECK(regularity(betti_table(I(4, {{1, 2}, {3, 4}}))) == 3);
        CHECK(regularity(betti_table(I(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}))) == 3);
        CHECK_THROWS_AS(regularity(BettiTable{}), PreconditionError);
    }

    TEST_CASE("linear resolutions") {
        for (Field k : kFields) {
            CHECK(has_linear_resolution(I(3, {{1, 2}, {1, 3}, {2, 3}}), k));
            CHECK(has_linear_resolution(I(4, {{1, 2, 3, 4}}), k));
            CHECK_FALSE(has_linear_resolution(I(4, {{1, 2}, {3, 4}}), k));
        }
        const SquarefreeIdeal sigma = stanley_reisner_ideal(d_closure(dunce_hat(), 2));
        CHECK(has_linear_resolution(sigma, Field::gf2()));
        CHECK(has_linear_resolution(sigma, Field::char0()));
        CHECK_THROWS_AS(has_linear_resolution(I(3, {{1}, {2, 3}})), PreconditionError);
        CHECK_THROWS_AS(has_linear_resolution(SquarefreeIdeal::zero(2)), PreconditionError);
    }

    TEST_CASE("componentwise linearity") {
        for (Field k : kFields) {
            CHECK(is_componentwise_linear(I(3, {{1}, {2, 3}}), k));
            CHECK_FALSE(is_componentwise_linear(stanley_reisner_ideal(four_cycle()), k));
            CHECK(is_componentwise_linear(stanley_reisner_ideal(basic_complex()), k));
        }
        CHECK_THROWS_AS(is_componentwise_linear(SquarefreeIdeal::zero(2)), PreconditionError);
    }

    TEST_CASE("pretty grid") {
        const std::string text = format_betti_table(betti_table(I(3, {{1, 2}, {1, 3}, {2, 3}})));
        std::istringstream in(text);
        std::vector<std::vector<std::string>> lines;
        for (std::string line; std::getline(in, line);) lines.push_back(tokens(line));
        REQUIRE(lines.size() == 4);
        CHECK(lines[0] == std::vector<std::string>{"field:", "gf2"});
        CHECK(lines[1] == std::vector<std::string>{"0", "1"});
        CHECK(lines[2] == std::vector<std::string>{"total:", "3", "2"});
        CHECK(lines[3] == std::vector<std::string>{"2:", "3", "2"});

        const std::string gap = format_betti_table(betti_table(I(4, {{1, 2}, {3, 4}})));
        CHECK(gap.find("3: . 1") != std::string::npos);
    }

    TEST_CASE("property: reduced Euler characteristic") {
        Rng rng(kSeedComplexes + 200);
        for (int k = 0; k < 200; ++k) {
            const SimplicialComplex g = random_mixed_complex(rng, uniform(rng, 1, 7));
            const auto f = g.f_vector();
            long long euler = 0;
            for (std::size_t t = 0; t < f.size(); ++t)
                euler += (t % 2 == 1 ? 1 : -1) * static_cast<long long>(f[t]);
            for (Field field : kFields) {
                const auto h = reduced_homology_dims(g, field);
                long long alt = 0;
                for (std::size_t t = 0; t < h.size(); ++t)
                    alt += (t % 2 == 1 ? 1 : -1) * static_cast<long long>(h[t]);
                CHECK(alt == euler);
            }
        }
    }

    TEST_CASE("property: row 0 of the table counts generators by degree") {
        Rng rng(kSeedIdeals + 200);
        for (int k = 0; k < 200; ++k) {
            const int n = uniform(rng, 1, 7);
            const SquarefreeIdeal ideal = random_ideal(rng, n);
            const BettiTable t = betti_table(ideal);
            for (int j = 0; j <= n; ++j) {
                std::uint64_t count = 0;
                for (Face g : ideal.generators())
                    if (g.size() == j) ++count;
                CHECK(t.at(0, j) == count);
            }
        }
    }

    TEST_CASE("property: truncation keeps the rows up to k") {
        Rng rng(kSeedIdeals + 201);
        for (int k = 0; k < 150; ++k) {
            const int n = uniform(rng, 2, 6);
            const SquarefreeIdeal ideal = random_ideal(rng, n);
            const int cut = uniform(rng, ideal.min_degree(), ideal.max_degree());
            const BettiTable full = betti_table(ideal);
            const BettiTable trunc = betti_table(truncation_leq(ideal, cut));
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= cut; ++j) CHECK(full.at(i, i + j) == trunc.at(i, i + j));
        }
    }

    TEST_CASE("property: adding a free face changes only two rows") {
        Rng rng(kSeedFreeFaces + 200);
        for (int k = 0; k < 150; ++k) {
            const int n = uniform(rng, 2, 6);
            const SquarefreeIdeal ideal = random_ideal(rng, n);
            const SimplicialComplex nerve = stanley_reisner_complex(ideal);
            if (nerve.is_empty_complex()) continue;
            const auto free = free_faces(nerve, n);
            const Face e = free[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(free.size()) - 1))];
            if (e.empty()) continue;
            const int d = e.size();
            for (Field field : {Field::gf2(), Field::char0()}) {
                const BettiTable before = betti_table(ideal, field);
                const BettiTable after = betti_table(add_generator(ideal, e), field);
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j)
                        if (j != d && j != d + 1) CHECK(before.at(i, i + j) == after.at(i, i + j));
            }
        }
    }

    TEST_CASE("property: d-chordal complexes give linear (d+1)-components") {
        Rng rng(kSeedClosures + 200);
        for (int k = 0; k < 150; ++k) {
            const int n = uniform(rng, 2, 6);
            const SimplicialComplex g = random_mixed_complex(rng, n);
            const SquarefreeIdeal ideal = stanley_reisner_ideal(g);
            if (ideal.is_zero()) continue;
            for (int d = 1; d < n; ++d) {
                const SquarefreeIdeal comp = degree_component(ideal, d + 1);
                if (comp.is_zero() || !is_d_chordal(g, d)) continue;
                CHECK(has_linear_resolution(comp, Field::gf2()));
                CHECK(has_linear_resolution(comp, Field::char0()));
            }
        }
    }

    TEST_CASE("property: chordal complexes give componentwise linear ideals") {
        Rng rng(kSeedClosures + 201);
        for (int k = 0; k < 150; ++k) {
            const SimplicialComplex g = random_mixed_complex(rng, uniform(rng, 2, 6));
            const SquarefreeIdeal ideal = stanley_reisner_ideal(g);
            if (ideal.is_zero() || !is_chordal(g)) continue;
            CHECK(is_componentwise_linear(ideal, Field::gf2()));
            CHECK(is_componentwise_linear(ideal, Field::char0()));
        }
    }

    TEST_CASE("property: tables do not depend on the worker count") {
        Rng rng(kSeedIdeals + 202);
        for (int k = 0; k < 60; ++k) {
            const SquarefreeIdeal ideal = random_ideal(rng, uniform(rng, 1, 8));
            CHECK(betti_table(ideal, Field::char0(), 1) == betti_table(ideal, Field::char0(), 4));
        }
    }
}
