#include "fsdem/evaluators/hungarian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

AssignmentProblem::AssignmentProblem(std::vector<std::vector<double>> cost) : cost_(std::move(cost)) {
    for (std::size_t r = 0; r < cost_.size(); ++r) {
        if (cost_[r].size() != cost_.size()) {
            fail(ErrorCode::invalid_input, "assignment cost matrix must be square; row " +
                                               std::to_string(r) + " has " +
                                               std::to_string(cost_[r].size()) + " entries for " +
                                               std::to_string(cost_.size()) + " rows");
        }
        for (double v : cost_[r]) {
            if (!std::isfinite(v)) fail(ErrorCode::invalid_input, "assignment costs must be finite");
        }
    }
}

Assignment hungarian_assignment(const AssignmentProblem& problem) {
    const std::size_t m = problem.size();
    Assignment result;
    if (m == 0) return result;

    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; index 0 is the virtual column used to start each augmentation.
    std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> row_of_col(m + 1, 0), way(m + 1, 0);

    for (std::size_t row = 1; row <= m; ++row) {
        row_of_col[0] = row;
        std::size_t col0 = 0;
        std::vector<double> min_slack(m + 1, inf);
        std::vector<bool> used(m + 1, false);
        do {
            used[col0] = true;
            const std::size_t r0 = row_of_col[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = problem.cost(r0 - 1, j - 1) - u[r0] - v[j];
                if (cur < min_slack[j]) {
                    min_slack[j] = cur;
                    way[j] = col0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    col1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            col0 = col1;
        } while (row_of_col[col0] != 0);
        // Flip the augmenting path.
        do {
            const std::size_t col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    result.columns.assign(m, 0);
    for (std::size_t j = 1; j <= m; ++j) result.columns[row_of_col[j] - 1] = j - 1;
    for (std::size_t r = 0; r < m; ++r) result.total_cost += problem.cost(r, result.columns[r]);
    return result;
}

}  // namespace fsdem
