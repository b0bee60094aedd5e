#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "litnet/coexpress.hpp"

using namespace litnet;

namespace {
// Two-pass direct-definition oracle, independent of the library path.
double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (double v : x) mx += v;
    for (double v : y) my += v;
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double num = 0, dx = 0, dy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        dx += (x[i] - mx) * (x[i] - mx);
        dy += (y[i] - my) * (y[i] - my);
    }
    return num / std::sqrt(dx * dy);
}
}  // namespace

TEST_CASE("pearson basic values") {
    std::vector<double> x{1, 2, 3, 4};
    CHECK(pearson(x, x) == doctest::Approx(1.0));
    std::vector<double> neg{5, 3, 1, -1};  // y = -2x + 7
    CHECK(pearson(x, neg) == doctest::Approx(-1.0));
    std::vector<double> y{1, 3, 2, 4};
    CHECK(pearson(x, y) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(pearson(x, y) == pearson(y, x));
}

TEST_CASE("pearson error paths") {
    std::vector<double> x{1, 2, 3};
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{3, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pearson(x, std::vector<double>{5, 5, 5}), std::domain_error);
}

TEST_CASE("pearson matches the direct-definition oracle (randomized)") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> len(3, 64);
    std::normal_distribution<double> value(0.0, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        int n = len(rng);
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = value(rng);
            y[i] = value(rng);
        }
        CHECK(pearson(x, y) == doctest::Approx(pearson_oracle(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("pearson affine invariance") {
    std::mt19937 rng(7);
    std::normal_distribution<double> value(0.0, 1.0);
    std::vector<double> x(16), y(16);
    for (int i = 0; i < 16; ++i) {
        x[i] = value(rng);
        y[i] = value(rng);
    }
    double base = pearson(x, y);
    std::vector<double> scaled(16), flipped(16);
    for (int i = 0; i < 16; ++i) {
        scaled[i] = 3.5 * x[i] + 11.0;
        flipped[i] = -2.0 * x[i] + 1.0;
    }
    CHECK(pearson(scaled, y) == doctest::Approx(base).epsilon(1e-9));
    CHECK(pearson(flipped, y) == doctest::Approx(-base).epsilon(1e-9));
}

TEST_CASE("ingest_expression") {
    SUBCASE("well-formed matrix") {
        std::istringstream in(
            "#probe\tentity\ts1\ts2\ts3\ts4\n"
            "p1\tg1\t1\t2\t3\t4\n"
            "p2\tg2\t2\t4\t6\t8\n");
        ExpressionMatrix m = ingest_expression(in);
        CHECK(m.sample_ids.size() == 4);
        CHECK(m.values.size() == 2);
        CHECK(m.dropped_rows == 0);
    }
    SUBCASE("row with a blank cell is dropped and counted") {
        std::istringstream in(
            "#probe\tentity\ts1\ts2\ts3\n"
            "p1\tg1\t1\t\t3\n"
            "p2\tg2\t2\t4\t6\n");
        ExpressionMatrix m = ingest_expression(in);
        CHECK(m.values.size() == 1);
        CHECK(m.dropped_rows == 1);
    }
    SUBCASE("non-numeric cell is dropped") {
        std::istringstream in(
            "#probe\tentity\ts1\ts2\ts3\n"
            "p1\tg1\t1\tNA\t3\n");
        ExpressionMatrix m = ingest_expression(in);
        CHECK(m.dropped_rows == 1);
    }
    SUBCASE("fewer than 3 samples is an error") {
        std::istringstream in("#probe\tentity\ts1\ts2\np1\tg1\t1\t2\n");
        CHECK_THROWS(ingest_expression(in));
    }
    SUBCASE("ragged row is an error") {
        std::istringstream in(
            "#probe\tentity\ts1\ts2\ts3\n"
            "p1\tg1\t1\t2\n");
        CHECK_THROWS(ingest_expression(in));
    }
}

namespace {
ExpressionMatrix planted_matrix() {
    // g1, g2, g3 are affine images of each other; g4, g5 carry noise.
    ExpressionMatrix m;
    m.sample_ids = {"s1", "s2", "s3", "s4", "s5"};
    auto add = [&](const char* probe, const char* entity, std::vector<double> row) {
        m.probe_ids.push_back(probe);
        m.entity_ids.push_back(entity);
        m.values.push_back(std::move(row));
    };
    add("p1", "g1", {1, 2, 3, 4, 5});
    add("p2", "g2", {3, 5, 7, 9, 11});     // 2*x + 1
    add("p3", "g3", {-1, -2, -3, -4, -5});  // -x
    add("p4", "g4", {2, 9, 4, 1, 7});
    add("p5", "g5", {5, 1, 8, 2, 4});
    return m;
}
}  // namespace

TEST_CASE("coexpression_network on planted perfect correlations") {
    CoexpressionResult result = coexpression_network(planted_matrix(), 1.0);
    CHECK(result.edges.size() == 3);
    for (const auto& e : result.edges) {
        CHECK(std::abs(e.r) >= 1.0 - 1e-9);
    }
    CHECK(result.edges[0].pair == PairKey("g1", "g2"));
    CHECK(result.edges[1].pair == PairKey("g1", "g3"));
    CHECK(result.edges[2].pair == PairKey("g2", "g3"));
}

TEST_CASE("threshold 1.0 on random continuous data is empty") {
    std::mt19937 rng(55);
    std::normal_distribution<double> value(0.0, 1.0);
    ExpressionMatrix m;
    m.sample_ids = {"s1", "s2", "s3", "s4", "s5", "s6"};
    for (int p = 0; p < 8; ++p) {
        m.probe_ids.push_back("p" + std::to_string(p));
        m.entity_ids.push_back("g" + std::to_string(p));
        std::vector<double> row(6);
        for (auto& v : row) v = value(rng);
        m.values.push_back(std::move(row));
    }
    CHECK(coexpression_network(m, 1.0).edges.empty());
}

TEST_CASE("higher threshold yields a subset") {
    ExpressionMatrix m = planted_matrix();
    CoexpressionResult loose = coexpression_network(m, 0.5);
    CoexpressionResult tight = coexpression_network(m, 0.9);
    CHECK(tight.edges.size() <= loose.edges.size());
    for (const auto& e : tight.edges) {
        bool found = false;
        for (const auto& f : loose.edges) found = found || f.pair == e.pair;
        CHECK(found);
    }
}

TEST_CASE("zero-variance probes are skipped and counted") {
    ExpressionMatrix m;
    m.sample_ids = {"s1", "s2", "s3"};
    m.probe_ids = {"p1", "p2"};
    m.entity_ids = {"g1", "g2"};
    m.values = {{1, 1, 1}, {1, 2, 3}};
    CoexpressionResult result = coexpression_network(m, 0.75);
    CHECK(result.edges.empty());
    CHECK(result.skipped_zero_variance == 1);
}

TEST_CASE("same-entity probe pairs collapse") {
    ExpressionMatrix m;
    m.sample_ids = {"s1", "s2", "s3", "s4"};
    m.probe_ids = {"p1", "p2", "p3"};
    m.entity_ids = {"g1", "g1", "g2"};  // two probes for g1
    m.values = {{1, 2, 3, 4}, {2, 4, 6, 8}, {4, 3, 2, 1}};
    CoexpressionResult result = coexpression_network(m, 0.9);
    REQUIRE(result.edges.size() == 1);
    CHECK(result.edges[0].pair == PairKey("g1", "g2"));
}

namespace {
std::vector<CorrelationEdge> sweep_edges() {
    return {{PairKey("g1", "g2"), 0.76},
            {PairKey("g1", "g3"), 0.80},
            {PairKey("g2", "g3"), -0.90},
            {PairKey("g3", "g4"), 0.95},
            {PairKey("g4", "g5"), 1.00}};
}
}  // namespace

TEST_CASE("threshold_sweep hand-counted fixture") {
    EdgeSet reference(5);
    reference.insert(PairKey("g2", "g3"));
    auto rows = threshold_sweep(sweep_edges(), reference);
    REQUIRE(rows.size() == 26);
    CHECK(rows.front().threshold == doctest::Approx(0.75));
    CHECK(rows.back().threshold == doctest::Approx(1.00));

    const SweepRow& at85 = rows[10];
    CHECK(at85.threshold == doctest::Approx(0.85));
    CHECK(at85.n_correlations == 3);
    CHECK(at85.n_in_reference == 1);
    CHECK(*at85.percentage() == doctest::Approx(100.0 / 3.0));

    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].n_correlations <= rows[i - 1].n_correlations);
        CHECK(rows[i].n_in_reference <= rows[i].n_correlations);
    }
}

TEST_CASE("sweep with no perfect pairs ends at an undefined percentage") {
    std::vector<CorrelationEdge> edges{{PairKey("a", "b"), 0.8}};
    auto rows = threshold_sweep(edges, EdgeSet(2));
    CHECK(rows.back().n_correlations == 0);
    CHECK(rows.back().n_in_reference == 0);
    CHECK_FALSE(rows.back().percentage().has_value());
}

TEST_CASE("sweep parameter validation") {
    CHECK_THROWS_AS(threshold_sweep({}, EdgeSet(0), 0.9, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(threshold_sweep({}, EdgeSet(0), 0.5, 0.9, -0.01),
                    std::invalid_argument);
}

TEST_CASE("sweep report formatting") {
    EdgeSet reference(5);
    reference.insert(PairKey("g2", "g3"));
    auto rows = threshold_sweep(sweep_edges(), reference, 0.98, 1.00);
    std::ostringstream out;
    write_sweep_report(rows, out);
    CHECK(out.str() ==
          "#threshold\tn_correlations\tn_in_reference\tpercentage\n"
          "0.98\t1\t0\t0.000\n"
          "0.99\t1\t0\t0.000\n"
          "1.00\t1\t0\t0.000\n");
}

TEST_CASE("intersect_networks") {
    std::vector<CorrelationEdge> n1{{PairKey("a", "b"), 0.8}, {PairKey("b", "c"), 0.9}};
    std::vector<CorrelationEdge> n2{{PairKey("b", "c"), -0.85}, {PairKey("c", "d"), 0.8}};
    EdgeSet both = intersect_networks({n1, n2});
    CHECK(both.size() == 1);
    CHECK(both.contains(PairKey("b", "c")));  // sign agreement not required

    EdgeSet same = intersect_networks({n1, n1});
    CHECK(same.size() == 2);

    CHECK_THROWS_AS(intersect_networks({n1}), std::invalid_argument);
}

TEST_CASE("hypothesis_set") {
    std::vector<CorrelationEdge> edges = sweep_edges();
    EdgeSet reference(5);
    reference.insert(PairKey("g2", "g3"));
    reference.insert(PairKey("g3", "g4"));

    auto hypotheses = hypothesis_set(edges, reference);
    REQUIRE(hypotheses.size() == 3);
    CHECK(hypotheses[0].pair == PairKey("g4", "g5"));  // descending |r|
    CHECK(hypotheses[1].pair == PairKey("g1", "g3"));
    CHECK(hypotheses[2].pair == PairKey("g1", "g2"));

    // hypotheses and (correlations ∩ reference) partition the input
    std::size_t in_reference = 0;
    for (const auto& e : edges) {
        if (reference.contains(e.pair)) ++in_reference;
    }
    CHECK(hypotheses.size() + in_reference == edges.size());

    EdgeSet superset(5);
    for (const auto& e : edges) superset.insert(e.pair);
    CHECK(hypothesis_set(edges, superset).empty());
}

TEST_CASE("ranked_hypotheses across datasets") {
    std::vector<CorrelationEdge> d1{{PairKey("a", "b"), 0.9},
                                    {PairKey("c", "d"), 0.8},
                                    {PairKey("e", "f"), 0.99}};
    std::vector<CorrelationEdge> d2{{PairKey("a", "b"), -0.95},
                                    {PairKey("e", "f"), 0.8}};
    EdgeSet reference(6);
    reference.insert(PairKey("e", "f"));
    auto ranked = ranked_hypotheses({d1, d2}, reference);
    REQUIRE(ranked.size() == 1);  // (c,d) missing from d2; (e,f) in literature
    CHECK(ranked[0].pair == PairKey("a", "b"));
    CHECK(ranked[0].min_abs_r == doctest::Approx(0.9));
}

TEST_CASE("read_correlations collapses symmetric duplicates keep-first") {
    std::istringstream in("#a\tb\tr\ng1\tg2\t0.8\ng2\tg1\t0.7\ng3\tg4\t-0.9\n");
    auto edges = read_correlations(in);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].r == doctest::Approx(0.8));
    CHECK(edges[1].r == doctest::Approx(-0.9));
}
