#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <hyperchroma/experiment.hpp>
#include <hyperchroma/two_phase.hpp>

using namespace hyperchroma;

TEST_CASE("default_p closed form") {
    // ln(4 * 100 * ln^2 100) / 200
    double expected = std::log(4.0 * 100.0 * std::pow(std::log(100.0), 2)) / 200.0;
    CHECK_THAT(default_p(100, 2), Catch::Matchers::WithinAbs(expected, 1e-14));
    CHECK_THAT(default_p(100, 2), Catch::Matchers::WithinAbs(0.04523, 1e-5));

    double p3 = default_p(3, 2);
    CHECK(p3 > 0.0);
    CHECK(p3 < 1.0);
}

TEST_CASE("default_p decreases in n") {
    for (std::size_t r : {2, 3, 5}) {
        double prev = default_p(10, r);
        for (std::size_t n = 11; n <= 200; ++n) {
            double cur = default_p(n, r);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("phase1 degenerate probabilities") {
    Hypergraph h(4, {{0, 1, 2}, {1, 2, 3}}, 3);
    Rng rng(1);
    // p = 0: total coloring, fully colorless impossible
    auto out = phase1(h, 2, 0.0, rng);
    CHECK(out.coloring.is_total());
    // p = 1: every edge fully colorless
    auto bad = phase1(h, 2, 1.0, rng);
    CHECK_FALSE(bad.ok);
    CHECK(bad.bad_kind == BadEdgeKind::fully_colorless);
}

TEST_CASE("phase1 ok-probability matches the 9-case enumeration for one pair edge") {
    Hypergraph h(2, {{0, 1}}, 2);
    const double p = 0.3;
    // 1 - [2((1-p)/2)^2 + 2*2*p*(1-p)/2 + p^2]
    const double p_ok =
        1.0 - (2.0 * std::pow((1.0 - p) / 2.0, 2) + 2.0 * 2.0 * p * (1.0 - p) / 2.0 +
               p * p);
    const int trials = 100000;
    Rng rng(2024);
    int ok = 0;
    for (int t = 0; t < trials; ++t)
        if (phase1(h, 2, p, rng).ok) ++ok;
    double freq = static_cast<double>(ok) / trials;
    double sigma3 = 3.0 * std::sqrt(p_ok * (1.0 - p_ok) / trials);
    CHECK_THAT(freq, Catch::Matchers::WithinAbs(p_ok, sigma3));
}

TEST_CASE("build_truncated keeps exactly the monochromatic-remainder edges") {
    Hypergraph h(4, {{0, 1, 2, 3}}, 4);
    Phase1Outcome outcome;
    outcome.ok = true;
    outcome.coloring.r = 2;

    outcome.coloring.colors = {0, 0, 2, 2};  // colorless {0,1}, rest color 2
    auto t = build_truncated(h, outcome);
    REQUIRE(t.sub.edge_count() == 1);
    CHECK(t.sub.edge(0) == Edge{0, 1});
    CHECK(t.labels[0] == 2);
    CHECK(t.origins[0] == 0);
    CHECK(t.colorless == std::vector<VertexId>{0, 1});

    outcome.coloring.colors = {0, 0, 1, 2};  // remainder polychromatic: dropped
    CHECK(build_truncated(h, outcome).sub.edge_count() == 0);

    outcome.coloring.colors = {1, 2, 1, 2};  // W empty
    auto empty = build_truncated(h, outcome);
    CHECK(empty.sub.edge_count() == 0);
    CHECK(empty.colorless.empty());

    outcome.ok = false;
    CHECK_THROWS_AS(build_truncated(h, outcome), std::invalid_argument);
}

TEST_CASE("phase2 with no truncated edges colors everything 1") {
    TruncatedHypergraph t;
    t.colorless = {1, 3};
    t.sub = Hypergraph(5, {});
    Rng rng(3);
    auto result = phase2(t, 2, rng);
    REQUIRE(std::holds_alternative<std::vector<Color>>(result));
    auto colors = std::get<std::vector<Color>>(result);
    CHECK(colors[1] == 1);
    CHECK(colors[3] == 1);
}

TEST_CASE("phase2 failure rate is 1/6 on the labeled 2-path") {
    // F = {0,1}:f=1, {1,2}:f=2; only the ordering 0<1<2 carries a strong chain
    TruncatedHypergraph t;
    t.colorless = {0, 1, 2};
    t.sub = Hypergraph(3, {{0, 1}, {1, 2}});
    t.labels = {1, 2};
    t.origins = {0, 1};

    // exact: enumerate all 6 orderings
    std::vector<VertexId> seq{0, 1, 2};
    int chains = 0, total = 0;
    std::sort(seq.begin(), seq.end());
    do {
        ++total;
        if (find_strong_ordered_chain(t.sub, VertexOrdering(seq), t.labels, 2)) ++chains;
    } while (std::next_permutation(seq.begin(), seq.end()));
    CHECK(total == 6);
    CHECK(chains == 1);

    // Monte Carlo agreement
    const int trials = 60000;
    Rng rng(5);
    int failures = 0;
    for (int i = 0; i < trials; ++i)
        if (std::holds_alternative<ChainCandidate>(phase2(t, 2, rng))) ++failures;
    double freq = static_cast<double>(failures) / trials;
    double sigma3 = 3.0 * std::sqrt((1.0 / 6.0) * (5.0 / 6.0) / trials);
    CHECK_THAT(freq, Catch::Matchers::WithinAbs(1.0 / 6.0, sigma3));
}

TEST_CASE("color_hypergraph trivial instances") {
    Hypergraph empty(5, {});
    ColorerConfig config;
    config.r = 2;
    config.seed = 1;
    auto result = color_hypergraph(empty, config);
    REQUIRE(result.success());
    CHECK(result.attempts.size() == 1);

    Hypergraph single(3, {{0, 1, 2}}, 3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        config.seed = seed;
        auto r2 = color_hypergraph(single, config);
        REQUIRE(r2.success());
        CHECK(is_proper_coloring(single, *r2.coloring, 2));
    }
}

TEST_CASE("color_hypergraph is deterministic in the seed") {
    Hypergraph h = random_uniform(30, 4, 20, 77);
    ColorerConfig config;
    config.r = 2;
    config.seed = 123;
    auto a = color_hypergraph(h, config);
    auto b = color_hypergraph(h, config);
    REQUIRE(a.success());
    REQUIRE(b.success());
    CHECK(*a.coloring == *b.coloring);
    CHECK(a.attempts.size() == b.attempts.size());
}

TEST_CASE("every success verifies as proper across random instances") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Hypergraph h = random_uniform(40, 5, 30, seed);
        ColorerConfig config;
        config.r = 2;
        config.seed = seed;
        auto result = color_hypergraph(h, config);
        if (result.success())
            CHECK(is_proper_coloring(h, *result.coloring, 2));
    }
}

TEST_CASE("phase-1 single-edge bad-kind frequencies match the analytic terms") {
    const std::size_t n = 6;
    Hypergraph h = complete_uniform(n, n);  // one edge on n vertices
    const Color r = 2;
    const double p = 0.2;
    const int trials = 100000;
    Rng rng(31337);
    int mono = 0, almost = 0, colorless = 0;
    for (int t = 0; t < trials; ++t) {
        auto out = phase1(h, r, p, rng);
        if (out.ok) continue;
        if (out.bad_kind == BadEdgeKind::monochromatic) ++mono;
        if (out.bad_kind == BadEdgeKind::almost_monochromatic) ++almost;
        if (out.bad_kind == BadEdgeKind::fully_colorless) ++colorless;
    }
    const double nd = n;
    const double exp_mono = r * std::pow((1.0 - p) / r, nd);
    const double exp_almost = r * nd * p * std::pow((1.0 - p) / r, nd - 1.0);
    const double exp_colorless = std::pow(p, nd);
    auto check3 = [&](int hits, double expected) {
        double freq = static_cast<double>(hits) / trials;
        double sigma3 = 3.0 * std::sqrt(expected * (1.0 - expected) / trials);
        CHECK_THAT(freq, Catch::Matchers::WithinAbs(expected, sigma3));
    };
    check3(mono, exp_mono);
    check3(almost, exp_almost);
    check3(colorless, exp_colorless);
}

TEST_CASE("experiment CSV is deterministic and verified") {
    ExperimentSpec spec;
    spec.gen_vertices = 30;
    spec.gen_n = 4;
    spec.gen_edges = 10;
    spec.r = 2;
    spec.trials = 10;
    spec.seed = 9;
    auto a = run_experiment(spec);
    auto b = run_experiment(spec);
    CHECK(report_to_csv(spec, a) == report_to_csv(spec, b));
    for (const auto& row : a.rows)
        if (row.success) CHECK(row.verified);

    // parallel execution produces the identical report
    spec.threads = 4;
    auto c = run_experiment(spec);
    spec.threads = 1;
    CHECK(report_to_csv(spec, c) == report_to_csv(spec, a));
}

TEST_CASE("sparse instances succeed every trial") {
    ExperimentSpec spec;
    spec.gen_vertices = 100;
    spec.gen_n = 10;
    spec.gen_edges = 5;
    spec.r = 2;
    spec.trials = 100;
    spec.seed = 4;
    auto report = run_experiment(spec);
    CHECK(report.success_rate == 1.0);
}
