#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ndl/graph.hpp"
#include "ndl/search.hpp"
#include "ndl/spectral.hpp"

using namespace ndl;

TEST_CASE("exhaustive verification of the smallest orders") {
    const EnumerationSummary two = enumerate_verify(2);
    CHECK(two.graphs_checked == 1);
    CHECK(two.max_spectral_radius == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.uniqueness_violations.empty());
    CHECK(two.bound_violations.empty());

    const EnumerationSummary three = enumerate_verify(3);
    CHECK(three.graphs_checked == 4);
    CHECK(three.max_spectral_radius == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(three.uniqueness_violations.empty());
    CHECK(three.bound_violations.empty());

    SUBCASE("the extremal 3-vertex graph is a path") {
        const Graph argmax = parse_graph6(three.argmax_graph6);
        CHECK(argmax.edge_count() == 2);
        CHECK(all_pairs_distances(argmax).diameter == 2);
    }
    SUBCASE("the minimizer of the second eigenvalue is also a path") {
        CHECK(three.min_second_eigenvalue == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    }

    const EnumerationSummary four = enumerate_verify(4);
    CHECK(four.graphs_checked == 38);
    CHECK(four.uniqueness_violations.empty());
    CHECK(four.bound_violations.empty());

    const EnumerationSummary five = enumerate_verify(5);
    CHECK(five.graphs_checked == 728);
    CHECK(five.uniqueness_violations.empty());
    CHECK(five.bound_violations.empty());
}

TEST_CASE("verification is independent of the worker count") {
    const EnumerationSummary serial = enumerate_verify(5, 1e-9, 1);
    const EnumerationSummary parallel = enumerate_verify(5, 1e-9, 4);
    CHECK(serial == parallel);

    std::uint64_t calls = 0;
    const EnumerationSummary with_progress =
        enumerate_verify(4, 1e-9, 2, [&](std::uint64_t done, std::uint64_t total) {
            ++calls;
            CHECK(done <= total);
        });
    CHECK(with_progress == enumerate_verify(4));
    CHECK(calls > 0);
}

TEST_CASE("verification rejects bad arguments") {
    CHECK_THROWS_AS(enumerate_verify(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_verify(9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_verify(5, 0.0), std::invalid_argument);
}

TEST_CASE("corpus verification") {
    const std::vector<Graph> corpus{make_complete(3), make_path(3), make_complete(4)};
    const EnumerationSummary summary = verify_graphs(corpus);
    CHECK(summary.graphs_checked == 3);
    CHECK(summary.n == 0);  // mixed orders
    CHECK(summary.uniqueness_violations.empty());
    CHECK(summary.bound_violations.empty());
    CHECK(summary.max_spectral_radius == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

    CHECK(verify_graphs({make_complete(5)}).n == 5);
    CHECK_THROWS_AS(verify_graphs({}), std::invalid_argument);
}

TEST_CASE("square-root barbell family parameters") {
    const BarbellParams p50 = paper_family_params(50);
    CHECK(p50.k1 == 20);
    CHECK(p50.p == 10);
    CHECK(p50.k2 == 20);

    const BarbellParams p100 = paper_family_params(100);
    CHECK(p100.k1 == 43);
    CHECK(p100.p == 14);

    CHECK_THROWS_AS(paper_family_params(4), std::invalid_argument);
}

TEST_CASE("barbell sweeps") {
    const auto all = barbell_sweep(8, SweepMode::AllCompositions);
    REQUIRE(!all.empty());

    SUBCASE("records are sorted by spectral radius, largest first") {
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(all[i - 1].spectral_radius >= all[i].spectral_radius);
    }
    SUBCASE("contains the symmetric 3-2-3 configuration") {
        const auto it = std::find_if(all.begin(), all.end(), [](const SweepRecord& r) {
            return r.k1 == 3 && r.p == 2 && r.k2 == 3;
        });
        REQUIRE(it != all.end());
        CHECK(it->diameter == 3);
        CHECK(it->n == 8);
    }
    SUBCASE("best composition dominates the square-root family member") {
        const auto paper = barbell_sweep(8, SweepMode::PaperFamily);
        REQUIRE(paper.size() == 1);
        CHECK(all.front().spectral_radius >= paper.front().spectral_radius);
    }
    SUBCASE("gap and scaled gap are consistent") {
        for (const auto& r : all) {
            CHECK(r.gap == doctest::Approx(2.0 - r.spectral_radius).epsilon(1e-14));
            CHECK(r.scaled_gap == doctest::Approx(r.gap * std::sqrt(8.0)).epsilon(1e-14));
            CHECK(r.gap > 0.0);
            CHECK(r.gap <= 2.0);
            if (r.k1 >= 2 && r.k2 >= 2 && r.p >= 1) CHECK(r.diameter == r.p + 1);
        }
    }
    CHECK_THROWS_AS(barbell_sweep(4, SweepMode::AllCompositions), std::invalid_argument);
}

TEST_CASE("gap series") {
    std::vector<SweepRecord> records;
    for (int n : {64, 100, 144}) records.push_back(barbell_sweep(n, SweepMode::PaperFamily)[0]);

    const auto series = fit_gap_constant(records);
    REQUIRE(series.size() == 3);
    CHECK(series[0].first == 64);
    for (const auto& [n, scaled] : series) {
        CHECK(scaled > 0.0);
        CHECK(scaled <= 4.0);
    }
    CHECK(series[0].second == doctest::Approx(records[0].scaled_gap).epsilon(1e-14));

    records.pop_back();
    CHECK_THROWS_AS(fit_gap_constant(records), std::invalid_argument);
}

TEST_CASE("diameter bound audits") {
    const BoundAuditReport k4 = bound_audit(make_complete(4));
    CHECK(k4.bound == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(k4.margin == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

    const BoundAuditReport p3 = bound_audit(make_path(3));
    CHECK(p3.bound == doctest::Approx(2.0 - 1.0 / 6.0).epsilon(1e-14));
    CHECK(p3.margin == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

    SUBCASE("margin stays nonnegative on random graphs") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph g = random_connected(2 + static_cast<int>(seed % 20), 0.35, seed);
            CHECK(bound_audit(g).margin >= -1e-9);
        }
    }
    CHECK_THROWS_AS(bound_audit(Graph(1)), std::invalid_argument);
}

TEST_CASE("hill climbing") {
    const HillClimbResult first = hill_climb(8, 1, 2000);
    CHECK(first.graph.connected());
    CHECK(first.spectral_radius >= first.start_spectral_radius);

    SUBCASE("deterministic in seed and step budget") {
        const HillClimbResult again = hill_climb(8, 1, 2000);
        CHECK(first == again);
        CHECK(hill_climb(8, 2, 500) == hill_climb(8, 2, 500));
    }
    SUBCASE("reaches the best barbell at order 8") {
        // frozen from a sweep run: the best 8-vertex barbell is (2,4,2)
        const double best_barbell = barbell_sweep(8, SweepMode::AllCompositions)[0].spectral_radius;
        CHECK(best_barbell == doctest::Approx(1.5903284496672514).epsilon(1e-10));
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL})
            CHECK(hill_climb(8, seed, 2000).spectral_radius >= best_barbell - 0.05);
    }
    SUBCASE("short budgets stop early") {
        const HillClimbResult stopped = hill_climb(8, 7, 5);
        CHECK(stopped.steps == 5);
    }
    CHECK_THROWS_AS(hill_climb(3, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(hill_climb(8, 1, 0), std::invalid_argument);
}

TEST_CASE("diameter ratio reporting") {
    std::vector<std::pair<std::string, Graph>> candidates;
    candidates.emplace_back("complete-16", make_complete(16));
    candidates.emplace_back("paper-100", make_barbell(paper_family_params(100)));

    const auto rows = diameter_lower_bound_report(candidates);
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].label == "complete-16");
    CHECK(rows[0].diameter == 1);
    CHECK(rows[0].diameter_ratio == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rows[0].flagged);  // 1 < 0.5 * 4

    CHECK(rows[1].diameter == paper_family_params(100).p + 1);
    CHECK(rows[1].diameter_ratio == doctest::Approx((14.0 + 1.0) / 10.0).epsilon(1e-14));
    CHECK_FALSE(rows[1].flagged);

    CHECK_THROWS_AS(diameter_lower_bound_report({}), std::invalid_argument);
}
