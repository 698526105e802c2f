#pragma once

#include <cstddef>
#include <vector>

namespace fsdem {

/// Square cost matrix with finite entries.
class AssignmentProblem {
public:
    /// Throws invalid-input on ragged, non-square or non-finite input.
    explicit AssignmentProblem(std::vector<std::vector<double>> cost);

    std::size_t size() const noexcept { return cost_.size(); }
    double cost(std::size_t row, std::size_t col) const noexcept { return cost_[row][col]; }

private:
    std::vector<std::vector<double>> cost_;
};

struct Assignment {
    /// column assigned to each row
    std::vector<std::size_t> columns;
    double total_cost = 0.0;
};

/// Minimum-cost perfect matching (Kuhn-Munkres with row/column potentials, O(m^3)).
Assignment hungarian_assignment(const AssignmentProblem& problem);

}  // namespace fsdem
