#include "chipfire/update.hpp"

namespace chipfire {

namespace {
// Below this the thread fork costs more than the loop.
constexpr std::int64_t kParallelThreshold = 1 << 13;
}

std::int64_t update_step_serial(std::span<std::int64_t> h) {
    const auto n = static_cast<std::int64_t>(h.size());
    std::int64_t r = 0;
    for (auto v : h) r += (v >= n);
    if (r == 0) return 0;
    for (auto& v : h) v += (v >= n) ? r - n : r;
    return r;
}

std::int64_t update_step_parallel(std::span<std::int64_t> h) {
    const auto n = static_cast<std::int64_t>(h.size());
    std::int64_t r = 0;
    std::int64_t* p = h.data();
#pragma omp parallel for reduction(+ : r) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) r += (p[i] >= n);
    if (r == 0) return 0;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) p[i] += (p[i] >= n) ? r - n : r;
    return r;
}

std::int64_t update_step(std::span<std::int64_t> h) {
    if (static_cast<std::int64_t>(h.size()) >= kParallelThreshold)
        return update_step_parallel(h);
    return update_step_serial(h);
}

std::pair<ChipConfig, std::int64_t> parallel_update(const ChipConfig& c) {
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::int64_t r = update_step_serial(h);
    return {ChipConfig(std::move(h)), r};
}

}  // namespace chipfire
