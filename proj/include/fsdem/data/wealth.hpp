#pragma once

#include <cstddef>
#include <cstdint>

#include "fsdem/data/dataset.hpp"

namespace fsdem {

/// Column order of the synthetic wealth dataset.
namespace wealth {
inline constexpr std::size_t age = 0;
inline constexpr std::size_t salary_eur = 1;
inline constexpr std::size_t salary_usd = 2;
inline constexpr std::size_t residence_size = 3;
inline constexpr std::size_t distance_km = 4;
inline constexpr std::size_t distance_miles = 5;

inline constexpr double usd_per_eur = 1.1;
inline constexpr double miles_per_km = 0.621371;
inline constexpr double label_flip_fraction = 0.02;
}  // namespace wealth

/// Six-feature dummy dataset with two exactly redundant pairs (salary in EUR
/// and USD, distance in km and miles). The binary target marks rows whose
/// standardized salary + residence size - distance exceeds its median, with
/// floor(2% of n) labels flipped. Throws invalid-input for n < 10.
Dataset generate_wealth_dummy(std::size_t n, std::uint64_t seed);

}  // namespace fsdem
