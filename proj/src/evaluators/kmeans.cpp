#include "fsdem/evaluators/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "fsdem/core/error.hpp"
#include "fsdem/data/preprocess.hpp"

namespace fsdem {

namespace {

using Centroids = std::vector<std::vector<double>>;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Centroids kmeans_plus_plus(const Matrix& x, int clusters, std::mt19937_64& rng) {
    const std::size_t n = x.rows();
    Centroids centers;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const auto first = x.row(pick(rng));
    centers.emplace_back(first.begin(), first.end());

    std::vector<double> closest(n, std::numeric_limits<double>::infinity());
    while (centers.size() < static_cast<std::size_t>(clusters)) {
        double total = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            closest[r] = std::min(closest[r], squared_distance(x.row(r), centers.back()));
            total += closest[r];
        }
        std::size_t chosen = 0;
        if (total > 0.0) {
            std::discrete_distribution<std::size_t> weighted(closest.begin(), closest.end());
            chosen = weighted(rng);
        } else {
            chosen = pick(rng);
        }
        const auto row = x.row(chosen);
        centers.emplace_back(row.begin(), row.end());
    }
    return centers;
}

// Assigns every point to its nearest centroid (lowest index on ties).
// Returns the inertia and whether any label changed.
std::pair<double, bool> assign(const Matrix& x, const Centroids& centers, std::vector<int>& labels,
                               std::vector<double>& distance) {
    double inertia = 0.0;
    bool changed = false;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = squared_distance(x.row(r), centers[c]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        changed = changed || labels[r] != best;
        labels[r] = best;
        distance[r] = best_d;
        inertia += best_d;
    }
    return {inertia, changed};
}

KMeansResult lloyd(const Matrix& x, Centroids centers, const KMeansConfig& cfg, double shift_tol) {
    const std::size_t n = x.rows();
    const std::size_t dims = x.cols();
    const std::size_t k = centers.size();

    KMeansResult result;
    result.labels.assign(n, -1);
    std::vector<double> distance(n, 0.0);

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const auto [inertia, changed] = assign(x, centers, result.labels, distance);
        result.inertia = inertia;
        result.inertia_history.push_back(inertia);
        if (!changed) break;

        Centroids next(k, std::vector<double>(dims, 0.0));
        std::vector<std::size_t> members(k, 0);
        for (std::size_t r = 0; r < n; ++r) {
            const auto c = static_cast<std::size_t>(result.labels[r]);
            ++members[c];
            for (std::size_t j = 0; j < dims; ++j) next[c][j] += x(r, j);
        }
        std::vector<bool> taken(n, false);
        for (std::size_t c = 0; c < k; ++c) {
            if (members[c] > 0) {
                for (auto& v : next[c]) v /= static_cast<double>(members[c]);
                continue;
            }
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t r = 0; r < n; ++r) {
                if (!taken[r] && distance[r] > far_d) {
                    far_d = distance[r];
                    far = r;
                }
            }
            taken[far] = true;
            const auto row = x.row(far);
            next[c].assign(row.begin(), row.end());
        }

        double shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) shift += squared_distance(centers[c], next[c]);
        centers = std::move(next);
        if (shift <= shift_tol) {
            const auto [final_inertia, unused] = assign(x, centers, result.labels, distance);
            result.inertia = final_inertia;
            result.inertia_history.push_back(final_inertia);
            break;
        }
    }
    result.centroids = std::move(centers);
    return result;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, int clusters, const KMeansConfig& cfg, std::uint64_t seed) {
    if (clusters < 1 || static_cast<std::size_t>(clusters) > points.rows()) {
        fail(ErrorCode::invalid_input, "cluster count " + std::to_string(clusters) +
                                           " must lie in [1, " + std::to_string(points.rows()) + "]");
    }
    if (cfg.restarts < 1 || cfg.max_iter < 1) {
        fail(ErrorCode::invalid_input, "kmeans needs restarts >= 1 and max_iter >= 1");
    }

    double mean_variance = 0.0;
    for (std::size_t c = 0; c < points.cols(); ++c) {
        const double sd = column_stddev(points, c);
        mean_variance += sd * sd;
    }
    mean_variance /= static_cast<double>(std::max<std::size_t>(points.cols(), 1));
    const double shift_tol = cfg.tol * mean_variance;

    std::mt19937_64 rng(seed);
    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        auto run = lloyd(points, kmeans_plus_plus(points, clusters, rng), cfg, shift_tol);
        if (run.inertia < best.inertia) best = std::move(run);
    }
    return best;
}

std::vector<int> kmeans_cluster(const Dataset& data, std::span<const FeatureIndex> features,
                                int clusters, const EvaluatorConfig& cfg) {
    cfg.validate();
    if (features.empty()) fail(ErrorCode::invalid_input, "feature subset is empty");
    const Matrix x = minmax_normalize(data.x().select_columns(features));
    return kmeans(x, clusters, cfg.kmeans, cfg.seed).labels;
}

}  // namespace fsdem
