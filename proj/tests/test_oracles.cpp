#include <catch2/catch_amalgamated.hpp>

#include <hyperchroma/oracles.hpp>
#include <hyperchroma/rng.hpp>

using namespace hyperchroma;

namespace {

// the seven lines of the Fano plane on vertices 0..6
Hypergraph fano() {
    return Hypergraph(7,
                      {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                       {1, 4, 6}, {2, 3, 6}, {2, 4, 5}},
                      3);
}

}  // namespace

TEST_CASE("chromatic_number basics") {
    CHECK(oracle::chromatic_number(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
    CHECK(oracle::chromatic_number(Hypergraph(3, {{0, 1, 2}})) == 2);
    CHECK(oracle::chromatic_number(Hypergraph(4, {})) == 1);
    CHECK(oracle::chromatic_number(complete_uniform(4, 2)) == 4);
}

TEST_CASE("Fano plane is not 2-colorable") {
    CHECK(oracle::chromatic_number(fano()) == 3);
}

TEST_CASE("exists_good_coloring") {
    Hypergraph single(2, {{0, 1}});
    CHECK(oracle::exists_good_coloring(single, {1}, 2));
    Hypergraph dup(2, {{0, 1}, {0, 1}});
    CHECK(oracle::exists_good_coloring(dup, {1, 2}, 2));
    // both labels over one pair edge: only mixed colorings are good
    CHECK(oracle::exists_good_coloring(dup, {1, 1}, 2));
}

TEST_CASE("exists_chain_free_ordering basics") {
    Hypergraph single(3, {{0, 1, 2}});
    CHECK(oracle::exists_chain_free_ordering(single, nullptr, 2));
    Hypergraph path(3, {{0, 1}, {1, 2}});
    EdgeLabeling f{1, 2};
    CHECK(oracle::exists_chain_free_ordering(path, &f, 2));
}

TEST_CASE("min_edges_uncolorable desk-scale values") {
    auto g22 = oracle::min_edges_uncolorable(2, 2, {4, 8});
    REQUIRE(g22.found);
    CHECK(g22.min_edges == 3);
    CHECK(oracle::chromatic_number(*g22.witness) == 3);

    auto g23 = oracle::min_edges_uncolorable(2, 3, {5, 8});
    REQUIRE(g23.found);
    CHECK(g23.min_edges == 6);
    CHECK(oracle::chromatic_number(*g23.witness) == 4);

    // n = 3, r = 2 at a small budget: no witness, flagged as a partial result
    auto g32 = oracle::min_edges_uncolorable(3, 2, {5, 5});
    CHECK_FALSE(g32.found);
    CHECK(g32.searched_edges == 5);
}

TEST_CASE("exact_ordered_probability enumeration values") {
    CHECK(oracle::exact_ordered_probability({2, 2}) == Rational(1, 6));
    CHECK(oracle::exact_ordered_probability({2, 3}) == Rational(1, 12));
    CHECK(oracle::exact_ordered_probability({2, 2, 2}) == Rational(1, 24));
    CHECK_THROWS_AS(oracle::exact_ordered_probability({6, 6}), oracle::BudgetError);
}

TEST_CASE("exact_strong_probability values") {
    CHECK(oracle::exact_strong_probability(3, 2, {2, 2}, Rational(1, 3)) ==
          Rational(4, 243));
    CHECK(oracle::exact_strong_probability(3, 2, {2, 2}, Rational(0, 1)) == 0);
    CHECK_THROWS_AS(oracle::exact_strong_probability(7, 2, {2, 2}, Rational(1, 2)),
                    oracle::BudgetError);
}

TEST_CASE("proposition equivalences on random tiny instances") {
    Rng rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t vertices = 4 + rng.uniform_below(2);
        std::size_t m = 1 + rng.uniform_below(4);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t size = 2 + rng.uniform_below(vertices - 1);
            std::vector<VertexId> pool(vertices);
            std::iota(pool.begin(), pool.end(), 0u);
            rng.shuffle(pool);
            edges.push_back(
                make_edge({pool.begin(), pool.begin() + static_cast<long>(size)}));
        }
        Hypergraph h(vertices, edges);
        for (std::size_t r : {2u, 3u}) {
            bool colorable = oracle::chromatic_number(h) <= r;
            CHECK(colorable == oracle::exists_chain_free_ordering(h, nullptr, r));
            EdgeLabeling f(m);
            for (auto& l : f) l = static_cast<Color>(rng.uniform_below(r)) + 1;
            CHECK(oracle::exists_good_coloring(h, f, static_cast<Color>(r)) ==
                  oracle::exists_chain_free_ordering(h, &f, r));
        }
    }
}

TEST_CASE("budget errors") {
    CHECK_THROWS_AS(oracle::chromatic_number(Hypergraph(21, {})), oracle::BudgetError);
    CHECK_THROWS_AS(oracle::exists_good_coloring(Hypergraph(13, {}), {}, 2),
                    oracle::BudgetError);
    CHECK_THROWS_AS(oracle::exists_chain_free_ordering(Hypergraph(9, {}), nullptr, 2),
                    oracle::BudgetError);
}
