#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "fsdem/core/error.hpp"
#include "fsdem/evaluators/clustering_accuracy.hpp"
#include "fsdem/evaluators/hungarian.hpp"
#include "fsdem/evaluators/kmeans.hpp"
#include "fsdem/evaluators/knn.hpp"
#include "fsdem/evaluators/measure_curve.hpp"
#include "test_support.hpp"

namespace fsdem {
namespace {

using test::Gen;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::io;
}

double brute_force_cost(const std::vector<std::vector<double>>& c) {
    std::vector<std::size_t> p(c.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        double s = 0.0;
        for (std::size_t r = 0; r < p.size(); ++r) s += c[r][p[r]];
        best = std::min(best, s);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Best match count over every one-to-one map of cluster ids onto class ids.
double brute_force_clacc(const std::vector<int>& pred, const std::vector<int>& truth) {
    const int clusters = *std::max_element(pred.begin(), pred.end()) + 1;
    const int classes = *std::max_element(truth.begin(), truth.end()) + 1;
    std::vector<int> target(static_cast<std::size_t>(std::max(clusters, classes)));
    std::iota(target.begin(), target.end(), 0);
    std::size_t best = 0;
    do {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < pred.size(); ++i) hits += target[static_cast<std::size_t>(pred[i])] == truth[i];
        best = std::max(best, hits);
    } while (std::next_permutation(target.begin(), target.end()));
    return static_cast<double>(best) / static_cast<double>(pred.size());
}

std::vector<FeatureIndex> all_features(std::size_t d) {
    std::vector<FeatureIndex> f(d);
    std::iota(f.begin(), f.end(), FeatureIndex{0});
    return f;
}

/// Two tight blobs far apart in every dimension.
Dataset blobs(std::size_t per_blob, std::size_t d, std::uint64_t seed) {
    Gen g(seed);
    Matrix x(2 * per_blob, d);
    std::vector<int> y(2 * per_blob);
    for (std::size_t r = 0; r < 2 * per_blob; ++r) {
        y[r] = r < per_blob ? 0 : 1;
        for (std::size_t c = 0; c < d; ++c) x(r, c) = y[r] * 100.0 + g.normal(0.0, 1.0);
    }
    return Dataset(std::move(x), std::move(y), test::names(d), "blobs");
}

// Hungarian assignment.

TEST(Hungarian, Examples) {
    const auto two = hungarian_assignment(AssignmentProblem({{1, 2}, {2, 1}}));
    EXPECT_EQ(two.columns, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(two.total_cost, 2.0);
    const auto zero = hungarian_assignment(AssignmentProblem({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(zero.total_cost, 0.0);
    auto sorted = zero.columns;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Hungarian, RejectsMalformedMatrices) {
    EXPECT_EQ(code_of([] { AssignmentProblem({{1, 2}}); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([] { AssignmentProblem({{1, 2}, {3}}); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([] { AssignmentProblem({{1, NAN}, {3, 4}}); }), ErrorCode::invalid_input);
}

TEST(Hungarian, MatchesExhaustiveSearch) {
    Gen g(51);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(g.integer(1, 6));
        const bool integral = trial % 2 == 0;
        std::vector<std::vector<double>> c(n, std::vector<double>(n));
        for (auto& row : c) {
            for (auto& v : row) v = integral ? g.integer(-20, 20) : g.real(-50.0, 50.0);
        }
        const auto a = hungarian_assignment(AssignmentProblem(c));
        auto cols = a.columns;
        std::sort(cols.begin(), cols.end());
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(cols[i], i);
        double sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) sum += c[r][a.columns[r]];
        EXPECT_EQ(a.total_cost, sum);
        if (integral) {
            EXPECT_EQ(a.total_cost, brute_force_cost(c));
        } else {
            EXPECT_NEAR(a.total_cost, brute_force_cost(c), 1e-9);
        }
    }
}

// Clustering accuracy.

TEST(Clacc, Examples) {
    EXPECT_EQ(clustering_accuracy(std::vector<int>{0, 1, 2, 1}, std::vector<int>{0, 1, 2, 1}), 1.0);
    EXPECT_EQ(clustering_accuracy(std::vector<int>{0, 0, 1, 1}, std::vector<int>{1, 1, 0, 0}), 1.0);
    EXPECT_NEAR(clustering_accuracy(std::vector<int>{0, 1, 1}, std::vector<int>{0, 0, 1}), 2.0 / 3.0, 1e-15);
    EXPECT_EQ(clustering_accuracy(std::vector<int>{7, 7, -3, -3}, std::vector<int>{2, 2, 5, 5}), 1.0);
}

TEST(Clacc, Errors) {
    EXPECT_EQ(code_of([] { clustering_accuracy(std::vector<int>{0, 1}, std::vector<int>{0}); }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([] { clustering_accuracy(std::vector<int>{}, std::vector<int>{}); }),
              ErrorCode::invalid_input);
}

TEST(Clacc, MatchesBruteForceOverBijections) {
    Gen g(52);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(g.integer(1, 40));
        const auto pred = g.labels(n, g.integer(1, 5));
        const auto truth = g.labels(n, g.integer(1, 5));
        EXPECT_NEAR(clustering_accuracy(pred, truth), brute_force_clacc(pred, truth), 1e-15);
    }
}

TEST(Clacc, InvariantUnderRelabeling) {
    Gen g(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(g.integer(1, 60));
        const int k = g.integer(1, 6);
        const auto pred = g.labels(n, k);
        const auto truth = g.labels(n, k);
        const double base = clustering_accuracy(pred, truth);
        const auto p = g.permutation(static_cast<std::size_t>(k));
        std::vector<int> relabeled_pred(n), relabeled_truth(n);
        for (std::size_t i = 0; i < n; ++i) {
            relabeled_pred[i] = static_cast<int>(p[static_cast<std::size_t>(pred[i])]);
            relabeled_truth[i] = static_cast<int>(p[static_cast<std::size_t>(truth[i])]);
        }
        EXPECT_EQ(clustering_accuracy(relabeled_pred, truth), base);
        EXPECT_EQ(clustering_accuracy(pred, relabeled_truth), base);
    }
}

TEST(Clacc, SingleClusterScoresLargestClassShare) {
    Gen g(54);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(g.integer(1, 80));
        const auto truth = g.labels(n, g.integer(1, 5));
        std::vector<std::size_t> counts(5, 0);
        for (int t : truth) ++counts[static_cast<std::size_t>(t)];
        const double expected =
            static_cast<double>(*std::max_element(counts.begin(), counts.end())) / static_cast<double>(n);
        EXPECT_EQ(clustering_accuracy(std::vector<int>(n, 4), truth), expected);
    }
}

// k-NN cross-validation.

TEST(Knn, DuplicatedSeparatedPointsScorePerfectly) {
    std::vector<std::vector<double>> rows;
    std::vector<int> y;
    for (int c = 0; c < 3; ++c) {
        for (int copy = 0; copy < 10; ++copy) {
            rows.push_back({c * 10.0, c * -5.0});
            y.push_back(c);
        }
    }
    const auto d = test::make_dataset(rows, y);
    EXPECT_EQ(knn_cv_accuracy(d, all_features(2), {}), 1.0);
}

TEST(Knn, ShuffledLabelsScoreNearChance) {
    Gen g(55);
    const std::size_t n = 2000;
    Matrix x(n, 3);
    std::vector<int> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        y[r] = static_cast<int>(r % 2);
        for (std::size_t c = 0; c < 3; ++c) x(r, c) = g.real();
    }
    g.shuffle(y);
    const Dataset d(x, y, test::names(3), "null");
    EXPECT_NEAR(knn_cv_accuracy(d, all_features(3), {}), 0.5, 0.05);
}

TEST(Knn, DeterministicAndBounded) {
    const auto d = test::informative_dataset(120, 4, 3);
    EvaluatorConfig cfg;
    cfg.seed = 5;
    const double a = knn_cv_accuracy(d, all_features(4), cfg);
    EXPECT_EQ(a, knn_cv_accuracy(d, all_features(4), cfg));
    for (std::uint64_t s = 0; s < 5; ++s) {
        cfg.seed = s;
        const double v = knn_cv_accuracy(d, std::vector<FeatureIndex>{1, 2}, cfg);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
    EXPECT_GT(knn_cv_accuracy(d, std::vector<FeatureIndex>{0}, cfg), 0.95);
}

TEST(Knn, Errors) {
    const auto d = test::informative_dataset(20, 3, 1);
    EXPECT_EQ(code_of([&] { knn_cv_accuracy(d, std::vector<FeatureIndex>{}, {}); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { knn_cv_accuracy(d, std::vector<FeatureIndex>{3}, {}); }), ErrorCode::invalid_input);
    EvaluatorConfig bad;
    bad.folds = 1;
    EXPECT_EQ(code_of([&] { knn_cv_accuracy(d, std::vector<FeatureIndex>{0}, bad); }), ErrorCode::invalid_input);
}

TEST(Knn, SmallClassesReduceFolds) {
    const auto d = test::make_dataset({{0}, {0.1}, {0.2}, {5}, {5.1}, {5.2}, {5.3}, {5.4}}, {0, 0, 0, 1, 1, 1, 1, 1});
    EvaluatorConfig cfg;
    cfg.knn_k = 1;
    EXPECT_EQ(knn_cv_accuracy(d, std::vector<FeatureIndex>{0}, cfg), 1.0);
}

// k-means.

TEST(KMeans, RecoversSeparatedBlobs) {
    const auto d = blobs(40, 3, 7);
    const auto labels = kmeans_cluster(d, all_features(3), 2, {});
    EXPECT_EQ(clustering_accuracy(labels, d.y()), 1.0);
}

TEST(KMeans, SingleClusterAndErrors) {
    const auto d = blobs(10, 2, 8);
    const auto labels = kmeans_cluster(d, all_features(2), 1, {});
    EXPECT_TRUE(std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; }));
    EXPECT_EQ(code_of([&] { kmeans_cluster(d, all_features(2), 21, {}); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { kmeans_cluster(d, all_features(2), 0, {}); }), ErrorCode::invalid_input);
}

TEST(KMeans, InertiaNeverIncreasesAndSeedIsDeterministic) {
    Gen g(56);
    Matrix x(200, 2);
    for (std::size_t r = 0; r < 200; ++r) {
        x(r, 0) = g.real();
        x(r, 1) = g.real();
    }
    KMeansConfig cfg;
    cfg.restarts = 3;
    const auto a = kmeans(x, 5, cfg, 11);
    for (std::size_t i = 1; i < a.inertia_history.size(); ++i) {
        EXPECT_LE(a.inertia_history[i], a.inertia_history[i - 1] + 1e-12);
    }
    const auto b = kmeans(x, 5, cfg, 11);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(a.inertia, b.inertia);
    std::vector<int> seen(5, 0);
    for (int l : a.labels) seen[static_cast<std::size_t>(l)] = 1;
    EXPECT_EQ(std::accumulate(seen.begin(), seen.end(), 0), 5);
}

TEST(KMeans, DuplicatePointsStillFillEveryCluster) {
    Matrix x(6, 1);
    for (std::size_t r = 0; r < 6; ++r) x(r, 0) = r < 4 ? 1.0 : 2.0;
    const auto res = kmeans(x, 3, {}, 1);
    EXPECT_EQ(res.labels.size(), 6u);
    for (int l : res.labels) {
        EXPECT_GE(l, 0);
        EXPECT_LT(l, 3);
    }
}

// Measures over rankings.

TEST(MeasureCurve, OnePointPerK) {
    const auto d = test::informative_dataset(80, 5, 4);
    const std::vector<FeatureIndex> ranking{0, 3, 1, 4, 2};
    const std::vector<int> ks{1, 3, 5};
    const auto c = measure_curve(d, ranking, {}, ks);
    ASSERT_EQ(c.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(c.points()[i].k, ks[i]);
        EXPECT_EQ(c.points()[i].value,
                  evaluate_measure(d, std::span(ranking).first(static_cast<std::size_t>(ks[i])), {}));
    }
    EXPECT_EQ(code_of([&] { measure_curve(d, ranking, {}, std::vector<int>{3, 1}); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { measure_curve(d, ranking, {}, std::vector<int>{1, 6}); }), ErrorCode::invalid_input);
}

TEST(MeasureCurve, ClaccOnBlobsIsPerfect) {
    const auto d = blobs(30, 2, 9);
    EvaluatorConfig cfg;
    cfg.measure = Measure::clacc;
    EXPECT_EQ(evaluate_measure(d, all_features(2), cfg), 1.0);
}

TEST(EvaluatorConfig, ParsesMeasures) {
    EXPECT_EQ(parse_measure("accuracy"), Measure::accuracy);
    EXPECT_EQ(parse_measure("clacc"), Measure::clacc);
    EXPECT_EQ(to_string(Measure::clacc), "clacc");
    EXPECT_EQ(code_of([] { parse_measure("f1"); }), ErrorCode::invalid_input);
}

}  // namespace
}  // namespace fsdem
