#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chipfire/cdf.hpp"
#include "chipfire/laws.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/rotation.hpp"

namespace chipfire {

struct DiagramRow {
    std::int64_t k = 0;
    Rat activity;
    std::uint64_t period = 1;
    std::uint64_t transient = 0;
};

// Activity phase diagram of a family: one row per k = 0..n.
struct PhaseDiagram {
    std::string family;
    std::int64_t n = 0;
    std::vector<DiagramRow> rows;
};

// Rows are independent simulations; computed in parallel, assembled by k.
PhaseDiagram phase_diagram(const FamilySpec& family, std::int64_t n, std::uint64_t budget = 0);

struct Census {
    std::map<Rat, std::int64_t> counts;          // reduced activity -> #k
    std::map<std::int64_t, std::int64_t> per_den;  // reduced denominator -> #k
    std::int64_t max_denominator = 1;
    std::int64_t total = 0;
};

Census census(const PhaseDiagram& d);

struct StaircasePoint {
    double y = 0;
    RotationEstimate rot;
    double value = 0;  // snapped value where certified, monotone-adjusted midpoint otherwise
};

// Samples s(y) = rho(R_y . Phi) on y = i/grid, i = 0..grid.
std::vector<StaircasePoint> limit_staircase(const CdfSpec& F, std::int64_t grid,
                                            std::int64_t q_max, std::uint64_t t_max = 1 << 13,
                                            std::int64_t poly_grid = 1 << 14);

struct ConvergenceRow {
    std::int64_t n = 0;
    double y = 0;
    std::int64_t k = 0;        // floor(n*y)
    Rat finite_activity;       // s_n(y) = a(sigma_n + k), exact
    RotationEstimate limit;    // rho(Phi_y)
    double deviation = 0;      // |s_n - snapped| or distance to bracket
    bool interior_match = false;  // limit snapped and s_n equals it exactly
};

// Deviation table |s_n(y) - s(y)| for a family converging to F.
std::vector<ConvergenceRow> convergence_report(const FamilySpec& family, const CdfSpec& F,
                                               const std::vector<std::int64_t>& n_list,
                                               const std::vector<double>& y_list,
                                               std::uint64_t budget = 0,
                                               std::int64_t q_max = 64,
                                               std::uint64_t t_max = 1 << 13);

}  // namespace chipfire
