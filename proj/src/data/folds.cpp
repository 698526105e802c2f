#include "fsdem/data/folds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

std::vector<int> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed) {
    if (folds < 2) fail(ErrorCode::invalid_input, "need at least 2 folds");
    if (static_cast<std::size_t>(folds) > labels.size()) {
        fail(ErrorCode::invalid_input, std::to_string(folds) + " folds exceed " +
                                           std::to_string(labels.size()) + " rows");
    }
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<int> assignment(labels.size(), 0);
    std::size_t offset = 0;
    for (auto& [label, rows] : by_class) {
        std::shuffle(rows.begin(), rows.end(), rng);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assignment[rows[i]] = static_cast<int>((offset + i) % static_cast<std::size_t>(folds));
        }
        offset += rows.size();
    }
    return assignment;
}

int effective_folds(std::span<const int> labels, int requested) {
    std::map<int, int> counts;
    for (int label : labels) ++counts[label];
    int smallest = requested;
    for (const auto& [label, count] : counts) smallest = std::min(smallest, count);
    return std::max(2, smallest);
}

}  // namespace fsdem
