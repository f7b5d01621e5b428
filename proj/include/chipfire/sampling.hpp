#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/config.hpp"

namespace chipfire {

// splitmix64; used to derive independent per-trial seeds so results do not
// depend on execution order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

// Heights uniform on [lo, hi].
ChipConfig random_config(std::mt19937_64& rng, std::int64_t n, std::int64_t lo, std::int64_t hi);

// Heights uniform on [0, 2n-1] (preconfined regime).
ChipConfig random_preconfined(std::mt19937_64& rng, std::int64_t n);

// base + uniform on [0, n-1]: spread <= n-1, confined for base <= n.
ChipConfig random_confined(std::mt19937_64& rng, std::int64_t n, std::int64_t base_max = 0);

// Uniformly random composition of `total` chips into n nonnegative parts.
ChipConfig random_composition(std::mt19937_64& rng, std::int64_t n, std::int64_t total);

}  // namespace chipfire
