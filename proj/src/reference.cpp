#include "chipfire/reference.hpp"

#include <map>

#include "chipfire/update.hpp"

namespace chipfire::reference {

SimulationSummary simulate_to_cycle_hashing(const ChipConfig& c, std::uint64_t max_steps) {
    const std::int64_t n = c.n();
    const std::uint64_t budget = max_steps ? max_steps : default_budget(n);

    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::map<std::vector<std::int64_t>, std::pair<std::uint64_t, std::int64_t>> seen;
    std::int64_t alpha = 0;
    std::uint64_t t = 0;

    while (true) {
        auto it = seen.find(h);
        if (it != seen.end()) {
            auto [s, alpha_s] = it->second;
            SimulationSummary out;
            out.transient = s;
            out.period = t - s;
            out.witness = {s, t};
            out.activity = Rat(alpha - alpha_s, static_cast<std::int64_t>(t - s) * n);
            return out;
        }
        seen.emplace(h, std::make_pair(t, alpha));
        if (t >= budget) throw BudgetExceeded(budget);
        alpha += update_step_serial(h);
        ++t;
    }
}

}  // namespace chipfire::reference
