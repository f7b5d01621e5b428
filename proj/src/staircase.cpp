#include "chipfire/staircase.hpp"

#include <algorithm>
#include <cmath>

#include "chipfire/simulate.hpp"

namespace chipfire {

PhaseDiagram phase_diagram(const FamilySpec& family, std::int64_t n, std::uint64_t budget) {
    PhaseDiagram d;
    d.family = family.name();
    d.n = n;
    d.rows.resize(n + 1);

    const ChipConfig base = family.base_config(n);
    bool failed = false;
    std::int64_t failed_k = 0;
    std::uint64_t failed_steps = 0;

// rows are independent simulations; assemble by k
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k <= n; ++k) {
        try {
            SimulateOptions opt;
            opt.max_steps = budget;
            SimulationSummary s = simulate_to_cycle(base.add(k), opt);
            d.rows[k] = {k, s.activity, s.period, s.transient};
        } catch (const BudgetExceeded& e) {
#pragma omp critical
            {
                if (!failed || k < failed_k) {
                    failed = true;
                    failed_k = k;
                    failed_steps = e.steps;
                }
            }
        }
    }
    if (failed) throw BudgetExceeded(failed_steps, failed_k);
    return d;
}

Census census(const PhaseDiagram& d) {
    Census c;
    for (const auto& row : d.rows) {
        ++c.counts[row.activity];
        ++c.per_den[row.activity.den()];
        c.max_denominator = std::max(c.max_denominator, row.activity.den());
        ++c.total;
    }
    return c;
}

std::vector<StaircasePoint> limit_staircase(const CdfSpec& F, std::int64_t grid,
                                            std::int64_t q_max, std::uint64_t t_max,
                                            std::int64_t poly_grid) {
    if (grid < 2) throw InvalidParams("grid must be at least 2");
    std::vector<StaircasePoint> pts(grid + 1);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i <= grid; ++i) {
        double y = static_cast<double>(i) / static_cast<double>(grid);
        RotationEstimate est;
        if (F.polygonal()) {
            est = rotation_number_numeric(lift_from_cdf_exact(F, Rat(i, grid)), t_max, q_max);
        } else {
            est = rotation_number_numeric(lift_from_cdf(F, y, poly_grid), t_max, q_max);
        }
        pts[i] = {y, est, est.value};
    }

    // monotone cleanup of the value column (brackets and snaps stay raw);
    // the carry is bounded by the bracket radius
    double run = pts.front().value;
    for (auto& p : pts) {
        p.value = std::max(p.value, run);
        run = p.value;
    }
    return pts;
}

std::vector<ConvergenceRow> convergence_report(const FamilySpec& family, const CdfSpec& F,
                                               const std::vector<std::int64_t>& n_list,
                                               const std::vector<double>& y_list,
                                               std::uint64_t budget, std::int64_t q_max,
                                               std::uint64_t t_max) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size() * y_list.size());
    for (double y : y_list) {
        RotationEstimate limit;
        if (F.polygonal()) {
            limit = rotation_number_numeric(lift_from_cdf_exact(F, Rat::dyadic_round(y)), t_max,
                                            q_max);
        } else {
            limit = rotation_number_numeric(lift_from_cdf(F, y), t_max, q_max);
        }
        for (std::int64_t n : n_list) {
            ConvergenceRow row;
            row.n = n;
            row.y = y;
            row.k = static_cast<std::int64_t>(std::floor(y * static_cast<double>(n)));
            SimulateOptions opt;
            opt.max_steps = budget;
            row.finite_activity =
                simulate_to_cycle(family.base_config(n).add(row.k), opt).activity;
            row.limit = limit;
            double sn = row.finite_activity.to_double();
            if (limit.exact()) {
                row.deviation = std::fabs(sn - limit.snapped->to_double());
                row.interior_match = (row.finite_activity == *limit.snapped);
            } else {
                row.deviation = std::max({0.0, limit.lower - sn, sn - limit.upper});
                row.interior_match = false;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace chipfire
