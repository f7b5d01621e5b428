#include "chipfire/sampling.hpp"

#include <algorithm>

namespace chipfire {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix_seed(seed, index));
}

ChipConfig random_config(std::mt19937_64& rng, std::int64_t n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<std::int64_t> h(n);
    for (auto& v : h) v = dist(rng);
    return ChipConfig(std::move(h));
}

ChipConfig random_preconfined(std::mt19937_64& rng, std::int64_t n) {
    return random_config(rng, n, 0, 2 * n - 1);
}

ChipConfig random_confined(std::mt19937_64& rng, std::int64_t n, std::int64_t base_max) {
    std::uniform_int_distribution<std::int64_t> base_dist(0, base_max > 0 ? base_max : n);
    std::int64_t base = base_dist(rng);
    return random_config(rng, n, base, base + n - 1);
}

ChipConfig random_composition(std::mt19937_64& rng, std::int64_t n, std::int64_t total) {
    // stars and bars: a uniform (n-1)-subset of [total + n - 1] gives a
    // uniform composition
    if (n == 1) return ChipConfig({total});
    const std::int64_t slots = total + n - 1;
    // Floyd's algorithm for a distinct sample
    std::vector<std::int64_t> chosen;
    chosen.reserve(n - 1);
    for (std::int64_t j = slots - (n - 1); j < slots; ++j) {
        std::uniform_int_distribution<std::int64_t> dist(0, j);
        std::int64_t x = dist(rng);
        if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) x = j;
        chosen.push_back(x);
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::int64_t> h(n);
    std::int64_t prev = -1;
    for (std::int64_t i = 0; i < n - 1; ++i) {
        h[i] = chosen[i] - prev - 1;
        prev = chosen[i];
    }
    h[n - 1] = slots - 1 - prev;
    return ChipConfig(std::move(h));
}

}  // namespace chipfire
