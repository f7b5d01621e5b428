#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "chipfire/config.hpp"

namespace chipfire {

// One parallel update in place; returns r(sigma), the number of vertices fired.
// Serial reference version: the literal two-case rule.
std::int64_t update_step_serial(std::span<std::int64_t> h);

// OpenMP kernel: count-reduction pass plus elementwise rewrite.
// Identical results to the serial version; worth it only for large n.
std::int64_t update_step_parallel(std::span<std::int64_t> h);

// Dispatches to the parallel kernel above a size threshold.
std::int64_t update_step(std::span<std::int64_t> h);

// Functional form: U(sigma) together with r(sigma).
std::pair<ChipConfig, std::int64_t> parallel_update(const ChipConfig& c);

}  // namespace chipfire
