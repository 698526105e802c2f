#include "fsdem/evaluators/clustering_accuracy.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "fsdem/core/error.hpp"
#include "fsdem/evaluators/hungarian.hpp"

namespace fsdem {

namespace {

std::vector<std::size_t> compact_ids(std::span<const int> ids, std::size_t& distinct) {
    std::map<int, std::size_t> index;
    for (int id : ids) index.emplace(id, 0);
    std::size_t next = 0;
    for (auto& [id, i] : index) i = next++;
    distinct = next;
    std::vector<std::size_t> out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = index.at(ids[i]);
    return out;
}

}  // namespace

double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth) {
    if (predicted.size() != truth.size()) {
        fail(ErrorCode::invalid_input, "predicted and true label vectors differ in length");
    }
    if (predicted.empty()) fail(ErrorCode::invalid_input, "clustering accuracy of an empty labeling");

    std::size_t clusters = 0;
    std::size_t classes = 0;
    const auto c = compact_ids(predicted, clusters);
    const auto g = compact_ids(truth, classes);
    const std::size_t m = std::max(clusters, classes);

    std::vector<std::vector<double>> counts(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < c.size(); ++i) counts[c[i]][g[i]] += 1.0;

    std::vector<std::vector<double>> cost(m, std::vector<double>(m, 0.0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t col = 0; col < m; ++col) cost[r][col] = -counts[r][col];
    }
    const auto assignment = hungarian_assignment(AssignmentProblem(std::move(cost)));

    double matched = 0.0;
    for (std::size_t r = 0; r < m; ++r) matched += counts[r][assignment.columns[r]];
    return matched / static_cast<double>(predicted.size());
}

}  // namespace fsdem
