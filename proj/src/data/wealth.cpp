#include "fsdem/data/wealth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fsdem/core/error.hpp"

namespace fsdem {

namespace {

std::vector<double> standardize(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sd > 0.0 ? (v[i] - mean) / sd : 0.0;
    return out;
}

}  // namespace

Dataset generate_wealth_dummy(std::size_t n, std::uint64_t seed) {
    if (n < 10) fail(ErrorCode::invalid_input, "wealth dataset needs n >= 10");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> age_dist(18.0, 80.0);
    std::lognormal_distribution<double> salary_dist(10.5, 0.5);
    std::normal_distribution<double> size_dist(90.0, 30.0);
    std::exponential_distribution<double> distance_dist(1.0 / 10.0);

    std::vector<double> age(n), salary(n), size(n), distance(n);
    for (std::size_t i = 0; i < n; ++i) {
        age[i] = age_dist(rng);
        salary[i] = salary_dist(rng);
        size[i] = std::max(10.0, size_dist(rng));
        distance[i] = distance_dist(rng);
    }

    const auto zs = standardize(salary);
    const auto zr = standardize(size);
    const auto zd = standardize(distance);
    std::vector<double> score(n);
    for (std::size_t i = 0; i < n; ++i) score[i] = zs[i] + zr[i] - zd[i];
    std::vector<double> sorted = score;
    std::sort(sorted.begin(), sorted.end());
    const double median =
        n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = score[i] > median ? 1 : 0;

    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto flips = static_cast<std::size_t>(std::floor(wealth::label_flip_fraction * n));
    for (std::size_t i = 0; i < flips; ++i) y[rows[i]] = 1 - y[rows[i]];

    Matrix x(n, 6);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, wealth::age) = age[i];
        x(i, wealth::salary_eur) = salary[i];
        x(i, wealth::salary_usd) = wealth::usd_per_eur * salary[i];
        x(i, wealth::residence_size) = size[i];
        x(i, wealth::distance_km) = distance[i];
        x(i, wealth::distance_miles) = wealth::miles_per_km * distance[i];
    }
    return Dataset(std::move(x), std::move(y),
                   {"age", "salary_eur", "salary_usd", "residence_size", "distance_km",
                    "distance_miles"},
                   "wealth", {"not_wealthy", "wealthy"});
}

}  // namespace fsdem
