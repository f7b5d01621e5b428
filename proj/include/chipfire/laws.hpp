#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/config.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

// sigma_n(v) = floor(n/4) + floor((v-1)/2), the stable family whose
// empirical CDF converges to the three-branch slope-2 histogram.
ChipConfig slope2_config(std::int64_t n);

// The explicit configuration with activity p/q and period q:
//   sigma(v) = v+p-1            for v <= q-1-p
//              v+n+p-q-1        for q-p <= v <= q-1
//              n+p-1            for v >= q.
// Requires 1 <= p < q <= n, gcd(p,q) = 1, p/q <= 1/2.
ChipConfig pq_construction(std::int64_t n, std::int64_t p, std::int64_t q);

// Realizes any activity p/q in (0,1): the construction above for p/q <= 1/2,
// its reflection for p/q > 1/2.
ChipConfig config_with_activity(std::int64_t n, std::int64_t p, std::int64_t q);

// c^j sigma: adds j to every height, minus n for v <= j.  Requires
// sigma(v)+j-n >= 0 for v <= j; preserves total chips and activity.
ChipConfig conjugate(const ChipConfig& c, std::int64_t j);

// tau(v) = 2n-1 - sigma(v); a(sigma) + a(tau) = 1.  Requires heights <= 2n-1.
ChipConfig reflect(const ChipConfig& c);

// Config families for sweeps.
struct FamilySpec {
    enum class Kind { Slope2, Constant, Pq };
    Kind kind = Kind::Slope2;
    std::int64_t constant = 0;       // Kind::Constant
    std::int64_t p = 0, q = 0;       // Kind::Pq

    static FamilySpec by_name(const std::string& name);  // "slope2" | "constant" | "constant:<h>"
    std::string name() const;
    ChipConfig base_config(std::int64_t n) const;
};

struct LawParams {
    std::int64_t n_max = 64;
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0: per-simulation default
};

struct LawReport {
    std::string law;
    bool pass = false;
    std::uint64_t trials_run = 0;
    std::uint64_t engaged = 0;  // trials whose hypothesis held
    std::string counterexample;  // first failing instance, empty when pass
};

// Runs one named law on deterministic pseudo-random instances.
// Throws UnknownLaw for unrecognized ids.
LawReport check_law(std::string_view law_id, const LawParams& params);

const std::vector<std::string>& law_ids();

}  // namespace chipfire
