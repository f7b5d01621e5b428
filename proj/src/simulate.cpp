#include "chipfire/simulate.hpp"

#include <algorithm>
#include <functional>

#include "chipfire/update.hpp"

namespace chipfire {

std::uint64_t default_budget(std::int64_t n) {
    return 64 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

namespace {

// Firings at the current step of a confined trajectory, read off the sorted
// snapshot.  For confined sigma sorted descending, interlacing pins the
// odometer to u_t(v) = Q + [v <= R] with alpha_t = Q*n + R, so the state at
// time t is sigma(v) + R - n*[v <= R] and
//   r_t = #{v <= R : sigma(v) >= 2n-R} + #{v > R : sigma(v) >= n-R}.
std::int64_t confined_firing_count(const std::vector<std::int64_t>& sorted_desc,
                                   std::int64_t rel_alpha_mod_n) {
    const auto n = static_cast<std::int64_t>(sorted_desc.size());
    const std::int64_t R = rel_alpha_mod_n;
    auto count_ge = [&](std::int64_t x) -> std::int64_t {
        // #{v : sorted_desc[v] >= x}: first strictly-smaller position
        return std::upper_bound(sorted_desc.begin(), sorted_desc.end(), x,
                                std::greater<std::int64_t>()) -
               sorted_desc.begin();
    };
    std::int64_t head = std::min(R, count_ge(2 * n - R));
    std::int64_t tail = std::max<std::int64_t>(0, count_ge(n - R) - R);
    return head + tail;
}

SimulationSummary close_fixed_point(std::uint64_t t, std::int64_t r, std::int64_t n,
                                    std::vector<StepRecord>&& trace, bool record_trace,
                                    std::int64_t alpha) {
    SimulationSummary s;
    s.transient = t;
    s.period = 1;
    s.activity = (r == n) ? Rat(1) : Rat(0);
    s.witness = {t, t + 1};
    if (record_trace) {
        trace.push_back({t + 1, r, alpha + r});
        s.alpha_trace = std::move(trace);
    }
    return s;
}

}  // namespace

SimulationSummary simulate_to_cycle(const ChipConfig& c, const SimulateOptions& opt) {
    const std::int64_t n = c.n();
    const std::uint64_t budget = opt.max_steps ? opt.max_steps : default_budget(n);

    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::vector<StepRecord> trace;
    std::int64_t alpha = 0;
    std::uint64_t t = 0;

    // Direct phase: literal updates until the state is confined (or a fixed
    // point shows up first).  Unstable mass spreads fast on K_n, so this
    // phase is short in practice; the budget is the guard.
    while (!is_confined(h)) {
        std::int64_t r = firing_count(h);
        if (opt.record_trace) trace.push_back({t, r, alpha});
        if (r == 0 || r == n)
            return close_fixed_point(t, r, n, std::move(trace), opt.record_trace, alpha);
        if (t >= budget) throw BudgetExceeded(budget);
        update_step(h);
        alpha += r;
        ++t;
    }

    // Residue phase: from the confined snapshot, alpha mod n determines the
    // state (divisibility criterion), so the first repeated residue at
    // confined times s < t certifies U^s sigma == U^t sigma with s = t0 and
    // t-s the minimal period.  Pigeonhole closes this within n+1 steps.
    const std::int64_t alpha_confined = alpha;

    std::vector<std::int64_t> sorted_desc;
    if (opt.fast_confined_stepper) {
        sorted_desc.assign(h.begin(), h.end());
        std::sort(sorted_desc.begin(), sorted_desc.end(), std::greater<std::int64_t>());
    }

    std::vector<std::int64_t> seen_time(n, -1);
    std::vector<std::int64_t> seen_alpha(n, 0);
    seen_time[alpha % n] = static_cast<std::int64_t>(t);
    seen_alpha[alpha % n] = alpha;

    while (true) {
        std::int64_t r;
        if (opt.fast_confined_stepper) {
            r = confined_firing_count(sorted_desc, (alpha - alpha_confined) % n);
        } else {
            r = firing_count(h);
        }
        if (opt.record_trace) trace.push_back({t, r, alpha});
        if (t >= budget) throw BudgetExceeded(budget);
        if (!opt.fast_confined_stepper) update_step(h);
        alpha += r;
        ++t;

        std::int64_t res = alpha % n;
        if (seen_time[res] >= 0) {
            const auto s = static_cast<std::uint64_t>(seen_time[res]);
            SimulationSummary out;
            out.transient = s;
            out.period = t - s;
            out.witness = {s, t};
            out.activity =
                Rat(alpha - seen_alpha[res], static_cast<std::int64_t>(t - s) * n);
            if (opt.record_trace) {
                std::int64_t r_close =
                    opt.fast_confined_stepper
                        ? confined_firing_count(sorted_desc, (alpha - alpha_confined) % n)
                        : firing_count(h);
                trace.push_back({t, r_close, alpha});
                out.alpha_trace = std::move(trace);
            }
            return out;
        }
        seen_time[res] = static_cast<std::int64_t>(t);
        seen_alpha[res] = alpha;
    }
}

SimulationSummary simulate_to_cycle(const ChipConfig& c, std::uint64_t max_steps) {
    SimulateOptions opt;
    opt.max_steps = max_steps;
    return simulate_to_cycle(c, opt);
}

Rat activity(const ChipConfig& c, std::uint64_t max_steps) {
    SimulateOptions opt;
    opt.max_steps = max_steps;
    return simulate_to_cycle(c, opt).activity;
}

std::vector<std::int64_t> firing_sequence(const ChipConfig& c, std::uint64_t steps) {
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::vector<std::int64_t> rs;
    rs.reserve(steps);
    for (std::uint64_t t = 0; t < steps; ++t) rs.push_back(update_step(h));
    return rs;
}

OdometerTrace odometer(const ChipConfig& c, std::uint64_t t) {
    const std::int64_t n = c.n();
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    OdometerTrace out;
    out.u.assign(n, 0);
    for (std::uint64_t s = 0; s < t; ++s) {
        for (std::int64_t v = 0; v < n; ++v) out.u[v] += (h[v] >= n);
        std::int64_t r = update_step(h);
        out.alpha += r;
    }
    return out;
}

}  // namespace chipfire
