#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

// Chip configuration on the complete graph K_n: sigma(v) chips at vertex v.
// Heights are kept in labeled order; the dynamics are exchangeable but
// conjugation and the odometer are label-sensitive.
class ChipConfig {
public:
    ChipConfig() = default;
    explicit ChipConfig(std::vector<std::int64_t> heights);

    std::int64_t n() const { return static_cast<std::int64_t>(heights_.size()); }
    std::span<const std::int64_t> heights() const { return heights_; }
    std::int64_t operator[](std::int64_t v) const { return heights_[v]; }  // 0-indexed

    std::int64_t total_chips() const;

    // Adds k chips at every vertex.
    ChipConfig add(std::int64_t k) const;

    friend bool operator==(const ChipConfig& a, const ChipConfig& b) {
        return a.heights_ == b.heights_;
    }

private:
    std::vector<std::int64_t> heights_;
};

// r(sigma): number of unstable vertices (height >= n).
std::int64_t firing_count(const ChipConfig& c);
std::int64_t firing_count(std::span<const std::int64_t> h);

// nu(sigma): number of distinct heights.
std::int64_t distinct_heights(const ChipConfig& c);

// max height <= 2n-1.
bool is_preconfined(const ChipConfig& c);
bool is_preconfined(std::span<const std::int64_t> h);

// preconfined and max - min <= n-1.
bool is_confined(const ChipConfig& c);
bool is_confined(std::span<const std::int64_t> h);

}  // namespace chipfire
