#include "fsdem/selectors/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fsdem/core/error.hpp"
#include "fsdem/core/seed.hpp"

namespace fsdem {

void ForestConfig::validate() const {
    if (trees < 1) fail(ErrorCode::invalid_input, "forest needs at least one tree");
    if (features_per_split && *features_per_split < 1) {
        fail(ErrorCode::invalid_input, "features_per_split must be >= 1");
    }
    if (max_depth && *max_depth < 1) fail(ErrorCode::invalid_input, "max_depth must be >= 1");
    if (min_samples_split < 2) fail(ErrorCode::invalid_input, "min_samples_split must be >= 2");
}

namespace {

// n * gini for the given class counts: n - sum(c^2) / n.
double weighted_gini(const std::vector<double>& counts, double n) {
    if (n <= 0.0) return 0.0;
    double sq = 0.0;
    for (double c : counts) sq += c * c;
    return n - sq / n;
}

struct Split {
    std::size_t feature = 0;
    double threshold = 0.0;
    double child_impurity = 0.0;  // nL*giniL + nR*giniR
    bool found = false;
};

class TreeGrower {
public:
    TreeGrower(const Dataset& data, const ForestConfig& cfg, std::size_t mtry, std::uint64_t seed)
        : data_(data),
          cfg_(cfg),
          mtry_(mtry),
          rng_(seed),
          classes_(static_cast<std::size_t>(data.num_classes())),
          importance_(data.features(), 0.0) {}

    std::vector<double> grow() {
        const std::size_t n = data_.rows();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::size_t> sample(n);
        for (auto& s : sample) s = pick(rng_);
        grow_node(sample, 0);
        return importance_;
    }

private:
    void grow_node(std::vector<std::size_t>& rows, int depth) {
        const double n = static_cast<double>(rows.size());
        std::vector<double> counts(classes_, 0.0);
        for (auto r : rows) counts[static_cast<std::size_t>(data_.y()[r])] += 1.0;
        const double impurity = weighted_gini(counts, n);

        if (rows.size() < static_cast<std::size_t>(cfg_.min_samples_split) || impurity <= 0.0 ||
            (cfg_.max_depth && depth >= *cfg_.max_depth)) {
            return;
        }
        const Split split = best_split(rows, counts);
        if (!split.found) return;

        importance_[split.feature] += impurity - split.child_impurity;

        std::vector<std::size_t> left, right;
        for (auto r : rows) {
            (data_.x()(r, split.feature) <= split.threshold ? left : right).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        grow_node(left, depth + 1);
        grow_node(right, depth + 1);
    }

    Split best_split(const std::vector<std::size_t>& rows, const std::vector<double>& counts) {
        std::vector<std::size_t> candidates(data_.features());
        std::iota(candidates.begin(), candidates.end(), 0);
        std::shuffle(candidates.begin(), candidates.end(), rng_);

        Split best;
        std::size_t evaluated = 0;
        std::vector<std::pair<double, int>> column(rows.size());
        std::vector<double> left(classes_), right(classes_);
        const double n = static_cast<double>(rows.size());

        for (auto f : candidates) {
            if (evaluated == mtry_) break;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                column[i] = {data_.x()(rows[i], f), data_.y()[rows[i]]};
            }
            std::sort(column.begin(), column.end());
            if (column.front().first == column.back().first) continue;  // constant here
            ++evaluated;

            std::fill(left.begin(), left.end(), 0.0);
            right = counts;
            for (std::size_t i = 0; i + 1 < column.size(); ++i) {
                const auto cls = static_cast<std::size_t>(column[i].second);
                left[cls] += 1.0;
                right[cls] -= 1.0;
                if (column[i].first == column[i + 1].first) continue;
                const double n_left = static_cast<double>(i + 1);
                const double child = weighted_gini(left, n_left) + weighted_gini(right, n - n_left);
                if (!best.found || child < best.child_impurity) {
                    best.found = true;
                    best.feature = f;
                    best.child_impurity = child;
                    best.threshold = 0.5 * (column[i].first + column[i + 1].first);
                    // Midpoints can round up onto the larger value.
                    if (!(best.threshold < column[i + 1].first)) best.threshold = column[i].first;
                }
            }
        }
        return best;
    }

    const Dataset& data_;
    const ForestConfig& cfg_;
    std::size_t mtry_;
    std::mt19937_64 rng_;
    std::size_t classes_;
    std::vector<double> importance_;
};

void normalize_in_place(std::vector<double>& v) {
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    if (total > 0.0) {
        for (auto& x : v) x /= total;
    }
}

}  // namespace

std::vector<double> forest_importances(const Dataset& data, const ForestConfig& cfg,
                                       std::uint64_t seed) {
    cfg.validate();
    if (data.rows() < 2) fail(ErrorCode::invalid_input, "forest needs at least 2 rows");
    if (data.num_classes() < 2) fail(ErrorCode::invalid_input, "forest needs at least 2 classes");

    const std::size_t d = data.features();
    const std::size_t mtry = std::min<std::size_t>(
        d, cfg.features_per_split
               ? static_cast<std::size_t>(*cfg.features_per_split)
               : std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(d)))));

    std::vector<double> mean(d, 0.0);
    for (int t = 0; t < cfg.trees; ++t) {
        TreeGrower grower(data, cfg, mtry, derive_seed(seed, static_cast<std::uint64_t>(t)));
        auto importance = grower.grow();
        normalize_in_place(importance);
        for (std::size_t f = 0; f < d; ++f) mean[f] += importance[f];
    }
    normalize_in_place(mean);
    if (std::all_of(mean.begin(), mean.end(), [](double v) { return v == 0.0; })) {
        std::fill(mean.begin(), mean.end(), 1.0 / static_cast<double>(d));
    }
    return mean;
}

FeatureRanking forest_importance_ranking(const Dataset& data, const ForestConfig& cfg,
                                         std::uint64_t seed) {
    return FeatureRanking::from_scores(forest_importances(data, cfg, seed));
}

}  // namespace fsdem
