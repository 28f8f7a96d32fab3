#include <catch2/catch_amalgamated.hpp>

#include <hyperchroma/hypergraph.hpp>
#include <hyperchroma/io.hpp>

using namespace hyperchroma;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t v = 1;
    for (std::size_t i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

}  // namespace

TEST_CASE("validate accepts a triangle") {
    Hypergraph h(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(validate(h).ok);
}

TEST_CASE("validate flags out-of-range ids") {
    Hypergraph h(2, {{0, 5}});
    auto result = validate(h);
    CHECK_FALSE(result.ok);
    CHECK(result.violation.find("out of range") != std::string::npos);
}

TEST_CASE("validate flags uniformity mismatch") {
    Hypergraph h(3, {{0, 1}}, 3);
    auto result = validate(h);
    CHECK_FALSE(result.ok);
    CHECK(result.violation.find("uniformity") != std::string::npos);
}

TEST_CASE("validate flags empty edges") {
    Hypergraph h(3, {{}});
    CHECK_FALSE(validate(h).ok);
}

TEST_CASE("complete_uniform edge counts") {
    CHECK(complete_uniform(3, 2).edge_count() == 3);
    CHECK(complete_uniform(4, 2).edge_count() == 6);
    CHECK(complete_uniform(7, 3).edge_count() == 35);
    CHECK_THROWS_AS(complete_uniform(2, 3), std::invalid_argument);
}

TEST_CASE("complete_uniform edges are distinct n-subsets") {
    for (std::size_t v = 2; v <= 6; ++v) {
        for (std::size_t n = 1; n <= v; ++n) {
            auto h = complete_uniform(v, n);
            CHECK(h.edge_count() == binom(v, n));
            auto edges = h.edges();
            for (const Edge& e : edges) CHECK(e.size() == n);
            std::sort(edges.begin(), edges.end());
            CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
        }
    }
}

TEST_CASE("random_uniform basics") {
    auto empty = random_uniform(10, 3, 0, 7);
    CHECK(empty.edge_count() == 0);

    auto h = random_uniform(10, 3, 5, 42);
    CHECK(h.edge_count() == 5);
    for (const Edge& e : h.edges()) CHECK(e.size() == 3);
    CHECK(validate(h).ok);

    CHECK(h == random_uniform(10, 3, 5, 42));
    CHECK_FALSE(h == random_uniform(10, 3, 5, 43));
}

TEST_CASE("max_edge_degree") {
    CHECK(max_edge_degree(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
    CHECK(max_edge_degree(Hypergraph(4, {{0, 1}, {2, 3}})) == 0);
    // duplicate copies count as distinct neighbors
    CHECK(max_edge_degree(Hypergraph(2, {{0, 1}, {0, 1}, {0, 1}})) == 2);
    CHECK(max_edge_degree(Hypergraph(2, {})) == 0);
}

TEST_CASE("max_edge_degree of complete uniform hypergraphs") {
    // an edge misses exactly the edges disjoint from it
    for (std::size_t v = 4; v <= 8; ++v) {
        for (std::size_t n = 2; 2 * n <= v; ++n) {
            auto h = complete_uniform(v, n);
            CHECK(max_edge_degree(h) == binom(v, n) - 1 - binom(v - n, n));
        }
    }
}

TEST_CASE("parse round trip") {
    const std::string text = "v 3\ne 0 1\ne 1 2\ne 0 2\n";
    Hypergraph h = parse_hypergraph(text);
    CHECK(h == Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(h.uniformity() == 2u);
    CHECK(serialize_hypergraph(h) == text);
    CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
}

TEST_CASE("parse normalizes edge order and comments") {
    Hypergraph h = parse_hypergraph("# hello\nv 4\ne 3 1\n\ne 0 2\n");
    CHECK(serialize_hypergraph(h) == "v 4\ne 1 3\ne 0 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_hypergraph("v 2\ne 0 7\n"), ParseError);
    try {
        parse_hypergraph("v 2\ne 0 7\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_hypergraph("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("v 2\nz 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("v x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("v 3\ne 1 1\n"), ParseError);
}

TEST_CASE("parse round trip on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_uniform(12, 4, 6, seed);
        CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
    }
}
