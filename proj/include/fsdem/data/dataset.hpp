#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsdem/core/types.hpp"

namespace fsdem {

/// Dense row-major n x d matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const noexcept { return values_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return values_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const noexcept {
        return std::span(values_).subspan(r * cols_, cols_);
    }
    std::vector<double> column(std::size_t c) const;

    /// Copy restricted to the given columns, in the given order.
    Matrix select_columns(std::span<const FeatureIndex> columns) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Labeled feature matrix. Immutable once constructed; the constructor
/// enforces finite values, n >= 1, d >= 1 and labels forming 0..C-1.
class Dataset {
public:
    Dataset(Matrix x, std::vector<int> y, std::vector<std::string> feature_names,
            std::string dataset_id, std::vector<std::string> class_names = {});

    const Matrix& x() const noexcept { return x_; }
    std::span<const int> y() const noexcept { return y_; }
    std::span<const std::string> feature_names() const noexcept { return feature_names_; }
    std::span<const std::string> class_names() const noexcept { return class_names_; }
    const std::string& id() const noexcept { return id_; }

    std::size_t rows() const noexcept { return x_.rows(); }
    std::size_t features() const noexcept { return x_.cols(); }
    int num_classes() const noexcept { return num_classes_; }
    std::vector<std::size_t> class_counts() const;

    /// Same labels and names with a replaced feature matrix of identical shape.
    Dataset with_features(Matrix x) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Matrix x_;
    std::vector<int> y_;
    std::vector<std::string> feature_names_;
    std::vector<std::string> class_names_;
    std::string id_;
    int num_classes_ = 0;
};

}  // namespace fsdem
