#include "doctest.h"

#include "chordal/betti.hpp"
#include "chordal/special_classes.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace chordal;
using namespace chordal::testing;

namespace {

using Entries = std::map<BettiTable::Key, std::uint64_t>;

MonomialIdeal J(int n, std::initializer_list<std::vector<std::uint32_t>> gens) {
    std::vector<Monomial> monos;
    for (const auto& e : gens) monos.emplace_back(e);
    return MonomialIdeal(n, std::move(monos));
}

}  // namespace

TEST_SUITE("oracles") {
    TEST_CASE("Koszul oracle on hand-computed tables") {
        CHECK(koszul_betti(J(2, {{2, 0}})).entries() == Entries{{{0, 2}, 1}});
        CHECK(koszul_betti(J(2, {{2, 0}, {1, 1}, {0, 2}})).entries() == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
        CHECK(koszul_betti(J(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})).entries() == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
        CHECK(koszul_betti(J(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).entries() ==
              Entries{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
        CHECK(koszul_betti(J(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})).entries() == Entries{{{0, 2}, 2}, {{1, 4}, 1}});
    }

    TEST_CASE("Eliahou-Kervaire formula on hand-computed tables") {
        CHECK(eliahou_kervaire_betti(J(2, {{2, 0}, {1, 1}, {0, 2}})).entries() == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
        CHECK(eliahou_kervaire_betti(J(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).entries() ==
              Entries{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
    }

    TEST_CASE("property: Eliahou-Kervaire agrees with the Koszul oracle") {
        Rng rng(kSeedSigma + 500);
        for (int k = 0; k < 40; ++k) {
            const MonomialIdeal j = random_strongly_stable(rng, uniform(rng, 1, 3), 3);
            REQUIRE(is_strongly_stable(j));
            CHECK(eliahou_kervaire_betti(j).entries() == koszul_betti(j).entries());
        }
    }

    TEST_CASE("property: Hochster tables agree with the Koszul oracle") {
        Rng rng(kSeedIdeals + 500);
        for (int k = 0; k < 60; ++k) {
            const SquarefreeIdeal ideal = random_ideal(rng, uniform(rng, 1, 5));
            CHECK(betti_table(ideal, Field::char0()).entries() == koszul_betti(ideal).entries());
        }
    }
}
