#include "fsdem/selectors/filters.hpp"

#include <algorithm>
#include <cmath>

#include "fsdem/selectors/discretize.hpp"

namespace fsdem {

namespace {

using Table = std::vector<std::vector<double>>;

// bins x classes observed counts
Table contingency(const Dataset& data, std::size_t feature, int bins) {
    const auto binned = equal_width_bins(data.x().column(feature), bins);
    Table table(static_cast<std::size_t>(bins),
                std::vector<double>(static_cast<std::size_t>(data.num_classes()), 0.0));
    const auto y = data.y();
    for (std::size_t r = 0; r < binned.size(); ++r) {
        table[static_cast<std::size_t>(binned[r])][static_cast<std::size_t>(y[r])] += 1.0;
    }
    return table;
}

double entropy_bits(const std::vector<double>& counts) {
    double total = 0.0;
    for (double c : counts) total += c;
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (double c : counts) {
        if (c > 0.0) {
            const double p = c / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

}  // namespace

std::vector<double> information_gain_scores(const Dataset& data, int bins) {
    std::vector<double> class_counts;
    for (auto c : data.class_counts()) class_counts.push_back(static_cast<double>(c));
    const double h_y = entropy_bits(class_counts);
    const double n = static_cast<double>(data.rows());

    std::vector<double> gains(data.features(), 0.0);
    for (std::size_t f = 0; f < data.features(); ++f) {
        double h_y_given_x = 0.0;
        for (const auto& row : contingency(data, f, bins)) {
            double in_bin = 0.0;
            for (double c : row) in_bin += c;
            if (in_bin > 0.0) h_y_given_x += in_bin / n * entropy_bits(row);
        }
        gains[f] = std::max(0.0, h_y - h_y_given_x);
    }
    return gains;
}

std::vector<double> chi2_scores(const Dataset& data, int bins) {
    const double n = static_cast<double>(data.rows());
    std::vector<double> stats(data.features(), 0.0);
    for (std::size_t f = 0; f < data.features(); ++f) {
        Table table = contingency(data, f, bins);
        std::erase_if(table, [](const std::vector<double>& row) {
            return std::all_of(row.begin(), row.end(), [](double c) { return c == 0.0; });
        });
        const std::size_t classes = table.front().size();
        std::vector<double> row_total(table.size(), 0.0), col_total(classes, 0.0);
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < classes; ++j) {
                row_total[i] += table[i][j];
                col_total[j] += table[i][j];
            }
        }
        double stat = 0.0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < classes; ++j) {
                if (col_total[j] == 0.0) continue;
                const double expected = row_total[i] * col_total[j] / n;
                const double diff = table[i][j] - expected;
                stat += diff * diff / expected;
            }
        }
        stats[f] = stat;
    }
    return stats;
}

FeatureRanking info_gain_ranking(const Dataset& data, int bins) {
    auto ranking = FeatureRanking::from_scores(information_gain_scores(data, bins));
    if (data.num_classes() < 2) {
        ranking.add_warning("single class: all information gains are 0");
    }
    return ranking;
}

FeatureRanking chi2_ranking(const Dataset& data, int bins) {
    auto ranking = FeatureRanking::from_scores(chi2_scores(data, bins));
    if (data.num_classes() < 2) ranking.add_warning("single class: all chi-square statistics are 0");
    return ranking;
}

}  // namespace fsdem
