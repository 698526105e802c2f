#include "fsdem/harness/seeding.hpp"

#include <array>

#include "fsdem/core/seed.hpp"

namespace fsdem {

std::uint64_t stable_hash(std::string_view text, std::uint64_t basis) {
    std::uint64_t h = basis;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t run_seed(std::uint64_t master_seed, std::string_view dataset_id,
                       std::string_view selector_id, std::string_view measure_id,
                       std::uint64_t repeat) {
    // Length-prefix each part so ("ab","c") and ("a","bc") hash apart.
    std::string key;
    for (auto part : {dataset_id, selector_id, measure_id}) {
        key += std::to_string(part.size());
        key += ':';
        key += part;
    }
    std::uint64_t h = stable_hash(key);
    h = derive_seed(h, master_seed);
    return derive_seed(h, repeat);
}

std::string to_hex(std::uint64_t value) {
    static constexpr std::array<char, 16> digits{'0', '1', '2', '3', '4', '5', '6', '7',
                                                 '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

}  // namespace fsdem
