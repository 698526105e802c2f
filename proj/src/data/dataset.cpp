#include "fsdem/data/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "fsdem/core/error.hpp"

namespace fsdem {

std::vector<double> Matrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::select_columns(std::span<const FeatureIndex> columns) const {
    Matrix out(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) {
                fail(ErrorCode::invalid_input,
                     "column " + std::to_string(columns[j]) + " out of range");
            }
            out(r, j) = (*this)(r, columns[j]);
        }
    }
    return out;
}

Dataset::Dataset(Matrix x, std::vector<int> y, std::vector<std::string> feature_names,
                 std::string dataset_id, std::vector<std::string> class_names)
    : x_(std::move(x)),
      y_(std::move(y)),
      feature_names_(std::move(feature_names)),
      class_names_(std::move(class_names)),
      id_(std::move(dataset_id)) {
    if (x_.rows() == 0 || x_.cols() == 0) {
        fail(ErrorCode::invalid_input, "dataset needs at least one row and one feature");
    }
    if (y_.size() != x_.rows()) {
        fail(ErrorCode::invalid_input, "label count does not match row count");
    }
    if (feature_names_.empty()) {
        for (std::size_t j = 0; j < x_.cols(); ++j) feature_names_.push_back("x" + std::to_string(j));
    }
    if (feature_names_.size() != x_.cols()) {
        fail(ErrorCode::invalid_input, "feature name count does not match column count");
    }
    for (std::size_t r = 0; r < x_.rows(); ++r) {
        for (double v : x_.row(r)) {
            if (!std::isfinite(v)) {
                fail(ErrorCode::invalid_input, "non-finite value in row " + std::to_string(r));
            }
        }
    }
    const int max_label = *std::max_element(y_.begin(), y_.end());
    if (*std::min_element(y_.begin(), y_.end()) < 0) {
        fail(ErrorCode::invalid_input, "labels must be nonnegative");
    }
    std::vector<std::uint8_t> present(static_cast<std::size_t>(max_label) + 1, 0);
    for (int label : y_) present[static_cast<std::size_t>(label)] = 1;
    if (std::find(present.begin(), present.end(), 0) != present.end()) {
        fail(ErrorCode::invalid_input, "labels must form the contiguous range 0..C-1");
    }
    num_classes_ = max_label + 1;
    if (class_names_.empty()) {
        for (int c = 0; c < num_classes_; ++c) class_names_.push_back(std::to_string(c));
    }
    if (class_names_.size() != static_cast<std::size_t>(num_classes_)) {
        fail(ErrorCode::invalid_input, "class name count does not match class count");
    }
}

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(num_classes_), 0);
    for (int label : y_) ++counts[static_cast<std::size_t>(label)];
    return counts;
}

Dataset Dataset::with_features(Matrix x) const {
    if (x.rows() != x_.rows() || x.cols() != x_.cols()) {
        fail(ErrorCode::invalid_input, "replacement feature matrix has a different shape");
    }
    return Dataset(std::move(x), y_, feature_names_, id_, class_names_);
}

}  // namespace fsdem
