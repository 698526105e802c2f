#include "fsdem/core/selection_stability.hpp"

#include <algorithm>
#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

namespace {

void check_distinct_in_range(std::span<const FeatureIndex> seq, std::size_t d,
                             const std::string& what) {
    std::vector<std::uint8_t> seen(d, 0);
    for (auto f : seq) {
        if (f >= d) {
            fail(ErrorCode::invalid_input,
                 what + ": feature index " + std::to_string(f) + " outside [0, " +
                     std::to_string(d) + ")");
        }
        if (seen[f]) fail(ErrorCode::invalid_input, what + ": duplicate feature " + std::to_string(f));
        seen[f] = 1;
    }
}

}  // namespace

SelectionMatrix::SelectionMatrix(std::vector<std::vector<std::uint8_t>> rows)
    : rows_(std::move(rows)) {
    if (rows_.size() < 2) {
        fail(ErrorCode::invalid_input, "selection matrix needs at least 2 runs");
    }
    d_ = rows_.front().size();
    if (d_ == 0) fail(ErrorCode::invalid_input, "selection matrix needs at least one feature");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        if (row.size() != d_) {
            fail(ErrorCode::invalid_input, "run " + std::to_string(r) + " has length " +
                                               std::to_string(row.size()) + ", expected " +
                                               std::to_string(d_));
        }
        bool any = false;
        for (auto& v : row) {
            if (v > 1) fail(ErrorCode::invalid_input, "selection indicators must be 0 or 1");
            any = any || v == 1;
        }
        if (!any) fail(ErrorCode::invalid_input, "run " + std::to_string(r) + " selects no feature");
    }
}

SelectionMatrix SelectionMatrix::from_subsets(std::span<const FeatureSubset> subsets,
                                              std::size_t d) {
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(subsets.size());
    for (const auto& s : subsets) {
        check_distinct_in_range(s, d, "subset");
        std::vector<std::uint8_t> row(d, 0);
        for (auto f : s) row[f] = 1;
        rows.push_back(std::move(row));
    }
    return SelectionMatrix(std::move(rows));
}

RankedSubsetFamily::RankedSubsetFamily(std::vector<FeatureSubset> sequences, std::size_t d)
    : sequences_(std::move(sequences)), d_(d) {
    if (sequences_.size() < 2) fail(ErrorCode::invalid_input, "family needs at least 2 sequences");
    for (std::size_t i = 0; i < sequences_.size(); ++i) {
        check_distinct_in_range(sequences_[i], d_, "sequence " + std::to_string(i));
    }
}

double nogueira_stability(const SelectionMatrix& selections) {
    const auto runs = static_cast<double>(selections.runs());
    const std::size_t d = selections.features();

    std::vector<double> column_sum(d, 0.0);
    double total_selected = 0.0;
    for (const auto& row : selections.rows()) {
        for (std::size_t f = 0; f < d; ++f) {
            column_sum[f] += row[f];
            total_selected += row[f];
        }
    }

    // Unbiased Bernoulli variance: K/(K-1) * p(1-p).
    double variance_sum = 0.0;
    for (double c : column_sum) {
        const double p = c / runs;
        variance_sum += runs / (runs - 1.0) * p * (1.0 - p);
    }
    const double dd = static_cast<double>(d);
    const double kbar = total_selected / runs;
    const double denom = kbar / dd * (1.0 - kbar / dd);
    if (denom == 0.0) {
        fail(ErrorCode::degenerate_selection,
             "every run selects all features; stability is undefined");
    }
    return 1.0 - (variance_sum / dd) / denom;
}

double consistency_index(std::span<const FeatureIndex> s1, std::span<const FeatureIndex> s2,
                         std::size_t d) {
    if (s1.size() != s2.size()) {
        fail(ErrorCode::invalid_input, "consistency index needs subsets of equal size");
    }
    const std::size_t k = s1.size();
    if (k == 0 || k >= d) {
        fail(ErrorCode::undefined_index, "consistency index undefined for k=" + std::to_string(k) +
                                             ", d=" + std::to_string(d));
    }
    check_distinct_in_range(s1, d, "first subset");
    check_distinct_in_range(s2, d, "second subset");

    std::vector<std::uint8_t> in_first(d, 0);
    for (auto f : s1) in_first[f] = 1;
    std::size_t r = 0;
    for (auto f : s2) r += in_first[f];

    const double kk = static_cast<double>(k);
    const double dd = static_cast<double>(d);
    return (static_cast<double>(r) * dd - kk * kk) / (kk * (dd - kk));
}

double kuncheva_stability(const RankedSubsetFamily& family, std::size_t k) {
    const auto seqs = family.sequences();
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        if (seqs[i].size() < k) {
            fail(ErrorCode::invalid_input, "sequence " + std::to_string(i) + " shorter than k=" +
                                               std::to_string(k));
        }
    }
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i + 1 < seqs.size(); ++i) {
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            sum += consistency_index(std::span(seqs[i]).first(k), std::span(seqs[j]).first(k),
                                     family.features());
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

}  // namespace fsdem
