#include "chipfire/config.hpp"

#include <algorithm>
#include <limits>

namespace chipfire {

ChipConfig::ChipConfig(std::vector<std::int64_t> heights) : heights_(std::move(heights)) {
    if (heights_.empty()) throw InvalidParams("chip configuration needs at least one vertex");
    __int128 total = 0;
    for (auto h : heights_) {
        if (h < 0) throw NegativeHeight("negative chip count");
        total += h;
    }
    if (total > std::numeric_limits<std::int64_t>::max())
        throw InvalidParams("total chips out of integer range");
}

std::int64_t ChipConfig::total_chips() const {
    std::int64_t total = 0;
    for (auto h : heights_) total += h;
    return total;
}

ChipConfig ChipConfig::add(std::int64_t k) const {
    std::vector<std::int64_t> h(heights_.begin(), heights_.end());
    for (auto& v : h) v += k;
    return ChipConfig(std::move(h));
}

std::int64_t firing_count(std::span<const std::int64_t> h) {
    const auto n = static_cast<std::int64_t>(h.size());
    std::int64_t r = 0;
    for (auto v : h) r += (v >= n);
    return r;
}

std::int64_t firing_count(const ChipConfig& c) { return firing_count(c.heights()); }

std::int64_t distinct_heights(const ChipConfig& c) {
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::sort(h.begin(), h.end());
    return std::unique(h.begin(), h.end()) - h.begin();
}

bool is_preconfined(std::span<const std::int64_t> h) {
    const auto n = static_cast<std::int64_t>(h.size());
    return std::all_of(h.begin(), h.end(), [n](std::int64_t v) { return v <= 2 * n - 1; });
}

bool is_preconfined(const ChipConfig& c) { return is_preconfined(c.heights()); }

bool is_confined(std::span<const std::int64_t> h) {
    const auto n = static_cast<std::int64_t>(h.size());
    auto [lo, hi] = std::minmax_element(h.begin(), h.end());
    return *hi <= 2 * n - 1 && *hi - *lo <= n - 1;
}

bool is_confined(const ChipConfig& c) { return is_confined(c.heights()); }

}  // namespace chipfire
