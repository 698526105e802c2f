#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fsdem {

/// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t stable_hash(std::string_view text, std::uint64_t basis = 0xCBF29CE484222325ULL);

/// Seed of one benchmark run. Depends only on its own coordinates, so adding
/// or reordering runs never changes another run's seed.
std::uint64_t run_seed(std::uint64_t master_seed, std::string_view dataset_id,
                       std::string_view selector_id, std::string_view measure_id,
                       std::uint64_t repeat);

/// Fixed-width lowercase hex, used for fingerprints.
std::string to_hex(std::uint64_t value);

}  // namespace fsdem
