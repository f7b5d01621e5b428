#include "chipfire/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "chipfire/lift.hpp"
#include "chipfire/reference.hpp"
#include "chipfire/sampling.hpp"
#include "chipfire/simulate.hpp"
#include "chipfire/update.hpp"

namespace chipfire {

ChipConfig slope2_config(std::int64_t n) {
    if (n < 2) throw InvalidParams("slope2 family needs n >= 2");
    std::vector<std::int64_t> h(n);
    for (std::int64_t v = 1; v <= n; ++v) h[v - 1] = n / 4 + (v - 1) / 2;
    return ChipConfig(std::move(h));
}

ChipConfig pq_construction(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (!(1 <= p && p < q && q <= n)) throw InvalidParams("need 1 <= p < q <= n");
    if (std::gcd(p, q) != 1) throw InvalidParams("p and q must be coprime");
    if (2 * p > q) throw InvalidParams("construction is stated for p/q <= 1/2");
    std::vector<std::int64_t> h(n);
    for (std::int64_t v = 1; v <= n; ++v) {
        if (v <= q - 1 - p)
            h[v - 1] = v + p - 1;
        else if (v <= q - 1)
            h[v - 1] = v + n + p - q - 1;
        else
            h[v - 1] = n + p - 1;
    }
    return ChipConfig(std::move(h));
}

ChipConfig config_with_activity(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (2 * p <= q) return pq_construction(n, p, q);
    // reflection sends activity p'/q to 1 - p'/q
    return reflect(pq_construction(n, q - p, q));
}

ChipConfig conjugate(const ChipConfig& c, std::int64_t j) {
    const std::int64_t n = c.n();
    if (j < 1 || j > n) throw InvalidParams("conjugation index must lie in [1,n]");
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    for (std::int64_t v = 1; v <= n; ++v) {
        std::int64_t nh = (v <= j) ? h[v - 1] + j - n : h[v - 1] + j;
        if (nh < 0) throw NegativeHeight("c^j needs sigma(v) >= n-j for v <= j");
        h[v - 1] = nh;
    }
    return ChipConfig(std::move(h));
}

ChipConfig reflect(const ChipConfig& c) {
    const std::int64_t n = c.n();
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    for (auto& v : h) {
        if (v > 2 * n - 1) throw HeightTooLarge("reflection needs heights <= 2n-1");
        v = 2 * n - 1 - v;
    }
    return ChipConfig(std::move(h));
}

FamilySpec FamilySpec::by_name(const std::string& name) {
    FamilySpec f;
    if (name == "slope2") {
        f.kind = Kind::Slope2;
        return f;
    }
    if (name.rfind("constant", 0) == 0) {
        f.kind = Kind::Constant;
        auto colon = name.find(':');
        f.constant = colon == std::string::npos ? 0 : std::stoll(name.substr(colon + 1));
        return f;
    }
    throw InvalidParams("unknown family '" + name + "'");
}

std::string FamilySpec::name() const {
    switch (kind) {
        case Kind::Slope2:
            return "slope2";
        case Kind::Constant:
            return "constant:" + std::to_string(constant);
        case Kind::Pq:
            return "pq:" + std::to_string(p) + "/" + std::to_string(q);
    }
    return "?";
}

ChipConfig FamilySpec::base_config(std::int64_t n) const {
    switch (kind) {
        case Kind::Slope2:
            return slope2_config(n);
        case Kind::Constant:
            return ChipConfig(std::vector<std::int64_t>(n, constant));
        case Kind::Pq:
            return pq_construction(n, p, q);
    }
    throw InvalidParams("bad family");
}

// ---------------------------------------------------------------------------
// law suite
// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    bool engaged = true;
    bool ok = true;
    std::string detail;
};

std::string dump_config(const ChipConfig& c) {
    std::ostringstream os;
    os << "n=" << c.n() << " heights=[";
    for (std::int64_t v = 0; v < c.n(); ++v) {
        if (v) os << ",";
        os << c[v];
    }
    os << "]";
    return os.str();
}

// Runs `trials` independent instances in parallel; reports the failure with
// the smallest trial index so the outcome is thread-count independent.
LawReport run_trials(std::string_view law, const LawParams& params,
                     const std::function<TrialOutcome(std::mt19937_64&, std::uint64_t)>& trial) {
    LawReport rep;
    rep.law = std::string(law);
    const auto trials = static_cast<std::int64_t>(params.trials);
    std::int64_t first_fail = -1;
    std::string fail_detail;
    std::uint64_t engaged = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : engaged)
    for (std::int64_t i = 0; i < trials; ++i) {
        auto rng = trial_rng(params.seed, static_cast<std::uint64_t>(i));
        TrialOutcome out;
        try {
            out = trial(rng, static_cast<std::uint64_t>(i));
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (out.engaged) ++engaged;
        if (!out.ok) {
#pragma omp critical
            {
                if (first_fail < 0 || i < first_fail) {
                    first_fail = i;
                    fail_detail = out.detail;
                }
            }
        }
    }
    rep.trials_run = params.trials;
    rep.engaged = engaged;
    rep.pass = first_fail < 0;
    if (!rep.pass)
        rep.counterexample = "trial " + std::to_string(first_fail) + ": " + fail_detail;
    return rep;
}

std::int64_t random_n(std::mt19937_64& rng, std::int64_t n_max, std::int64_t n_min = 2) {
    std::uniform_int_distribution<std::int64_t> d(n_min, std::max(n_min, n_max));
    return d(rng);
}

// --- individual laws -------------------------------------------------------

TrialOutcome law_conservation(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, std::min<std::int64_t>(n_max, 512));
    ChipConfig c = random_config(rng, n, 0, 3 * n);
    std::int64_t before = c.total_chips();
    auto [next, r] = parallel_update(c);
    (void)r;
    if (next.total_chips() != before)
        return {true, false, "total changed: " + dump_config(c)};
    return {};
}

TrialOutcome law_congruence(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_config(rng, n, 0, 3 * n);
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    for (std::uint64_t t = 1; t <= 16; ++t) {
        update_step_serial(h);
        for (std::int64_t v = 0; v < n; ++v) {
            std::int64_t lhs = (h[v] - h[0]) % n;
            std::int64_t rhs = (c[v] - c[0]) % n;
            if ((lhs - rhs) % n != 0)
                return {true, false,
                        "t=" + std::to_string(t) + " v=" + std::to_string(v + 1) + " on " +
                            dump_config(c)};
        }
    }
    return {};
}

TrialOutcome law_odometer_identity(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_config(rng, n, 0, 3 * n);
    std::uniform_int_distribution<std::uint64_t> td(0, 2 * static_cast<std::uint64_t>(n));
    std::uint64_t t = td(rng);
    OdometerTrace tr = odometer(c, t);
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    for (std::uint64_t s = 0; s < t; ++s) update_step_serial(h);
    for (std::int64_t v = 0; v < n; ++v)
        if (h[v] - c[v] != tr.alpha - n * tr.u[v])
            return {true, false, "t=" + std::to_string(t) + " " + dump_config(c)};
    return {};
}

TrialOutcome law_period_bound(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_preconfined(rng, n);
    SimulationSummary s = simulate_to_cycle(c);
    if (static_cast<std::int64_t>(s.period) > distinct_heights(c))
        return {true, false,
                "period " + std::to_string(s.period) + " > nu " +
                    std::to_string(distinct_heights(c)) + " on " + dump_config(c)};
    return {};
}

TrialOutcome law_denominator(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_preconfined(rng, n);
    SimulationSummary s = simulate_to_cycle(c);
    if (static_cast<std::int64_t>(s.period) != s.activity.den())
        return {true, false,
                "activity " + s.activity.str() + " but period " + std::to_string(s.period) +
                    " on " + dump_config(c)};
    return {};
}

TrialOutcome law_divisibility(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_confined(rng, n);
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    const std::vector<std::int64_t> init = h;
    std::int64_t alpha = 0;
    for (std::uint64_t t = 1; t <= 3 * static_cast<std::uint64_t>(n); ++t) {
        alpha += update_step_serial(h);
        bool same = (h == init);
        bool divides = (alpha % n == 0);
        if (same != divides)
            return {true, false,
                    "t=" + std::to_string(t) + " alpha=" + std::to_string(alpha) + " on " +
                        dump_config(c)};
    }
    return {};
}

TrialOutcome law_interlacing(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_confined(rng, n);
    // sorted height order makes the pairwise bound a chain condition
    std::vector<std::int64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int64_t a, std::int64_t b) { return c[a] < c[b]; });
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::vector<std::int64_t> u(n, 0);
    for (std::uint64_t t = 1; t <= 3 * static_cast<std::uint64_t>(n); ++t) {
        for (std::int64_t v = 0; v < n; ++v) u[v] += (h[v] >= n);
        update_step_serial(h);
        for (std::int64_t i = 1; i < n; ++i) {
            std::int64_t lo = order[i - 1], hi = order[i];
            if (!(u[lo] <= u[hi] && u[hi] <= u[lo] + 1))
                return {true, false, "t=" + std::to_string(t) + " on " + dump_config(c)};
        }
        std::int64_t lo = order.front(), hi = order.back();
        if (u[hi] > u[lo] + 1)
            return {true, false, "t=" + std::to_string(t) + " spread on " + dump_config(c)};
    }
    return {};
}

TrialOutcome law_constant_odometer(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_confined(rng, n);
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    const std::vector<std::int64_t> init = h;
    std::vector<std::int64_t> u(n, 0);
    for (std::uint64_t t = 1; t <= 3 * static_cast<std::uint64_t>(n); ++t) {
        for (std::int64_t v = 0; v < n; ++v) u[v] += (h[v] >= n);
        update_step_serial(h);
        bool same = (h == init);
        bool constant = std::all_of(u.begin(), u.end(), [&](std::int64_t x) { return x == u[0]; });
        if (same != constant)
            return {true, false, "t=" + std::to_string(t) + " on " + dump_config(c)};
    }
    return {};
}

TrialOutcome law_period2_window(std::mt19937_64& rng, std::uint64_t index, std::int64_t n_max) {
    // spread trials over n in 3..n_max; force totals near both window edges
    std::int64_t span = std::max<std::int64_t>(1, n_max - 2);
    std::int64_t n = 3 + static_cast<std::int64_t>(index % static_cast<std::uint64_t>(span));
    std::int64_t lo = n * n - n + 1, hi = n * n - 1;
    std::int64_t total;
    // cycle the edge cases per full sweep over n so every n hits both edges
    switch ((index / static_cast<std::uint64_t>(span)) % 4) {
        case 0:
            total = lo;
            break;
        case 1:
            total = hi;
            break;
        default: {
            std::uniform_int_distribution<std::int64_t> d(lo, hi);
            total = d(rng);
        }
    }
    ChipConfig c = random_composition(rng, n, total);
    SimulationSummary s = simulate_to_cycle(c);
    if (s.period != 2 || !(s.activity == Rat(1, 2)))
        return {true, false,
                "period " + std::to_string(s.period) + " activity " + s.activity.str() + " on " +
                    dump_config(c)};
    return {};
}

TrialOutcome law_u2(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    // heavy configs so that the two-step hypothesis u_2 >= 1 often holds
    ChipConfig c = random_config(rng, n, n - 1, 2 * n - 1);
    OdometerTrace u2 = odometer(c, 2);
    bool engaged = std::all_of(u2.u.begin(), u2.u.end(), [](std::int64_t x) { return x >= 1; });
    if (!engaged) return {false, true, ""};
    std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
    std::vector<std::int64_t> u(n, 0);
    for (std::uint64_t t = 1; t <= 2 * static_cast<std::uint64_t>(n); ++t) {
        for (std::int64_t v = 0; v < n; ++v) u[v] += (h[v] >= n);
        update_step_serial(h);
        if (t % 2 == 0) {
            std::int64_t half = static_cast<std::int64_t>(t / 2);
            for (std::int64_t v = 0; v < n; ++v)
                if (u[v] < half)
                    return {true, false, "t=" + std::to_string(t) + " on " + dump_config(c)};
        }
    }
    return {};
}

TrialOutcome law_reflection(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    ChipConfig c = random_preconfined(rng, n);
    Rat sum = activity(c) + activity(reflect(c));
    if (!(sum == Rat(1)))
        return {true, false, "a+a' = " + sum.str() + " on " + dump_config(c)};
    return {};
}

TrialOutcome law_conjugation(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, n_max);
    std::uniform_int_distribution<std::int64_t> jd(1, n);
    std::int64_t j = jd(rng);
    // satisfy the precondition sigma(v) >= n-j for v <= j
    std::vector<std::int64_t> h(n);
    std::uniform_int_distribution<std::int64_t> high(std::max<std::int64_t>(0, n - j), 2 * n - 1);
    std::uniform_int_distribution<std::int64_t> any(0, 2 * n - 1);
    for (std::int64_t v = 1; v <= n; ++v) h[v - 1] = (v <= j) ? high(rng) : any(rng);
    ChipConfig c{std::move(h)};
    ChipConfig cj = conjugate(c, j);
    if (cj.total_chips() != c.total_chips())
        return {true, false, "total changed, j=" + std::to_string(j) + " " + dump_config(c)};
    if (!(conjugate(c, n) == c))
        return {true, false, "c^n != id on " + dump_config(c)};
    if (!(activity(cj) == activity(c)))
        return {true, false,
                "a(c^j sigma) = " + activity(cj).str() + " != " + activity(c).str() + ", j=" +
                    std::to_string(j) + " " + dump_config(c)};
    return {};
}

TrialOutcome law_functoriality(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, std::min<std::int64_t>(n_max, 64));
    ChipConfig c = random_preconfined(rng, n);
    ExactLift via_config = lift_from_config(parallel_update(c).first);
    ExactLift via_lift = update_lift(lift_from_config(c));
    if (!lifts_equal(via_config, via_lift))
        return {true, false, dump_config(c)};
    return {};
}

TrialOutcome law_lift_iterates(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, std::min<std::int64_t>(n_max, 64));
    ChipConfig c = random_preconfined(rng, n);
    ExactLift f = lift_from_config(c);
    std::vector<std::int64_t> rs = firing_sequence(c, 2 * static_cast<std::uint64_t>(n));
    Rat beta(0);
    std::int64_t alpha = 0;
    for (std::size_t t = 0; t < rs.size(); ++t) {
        beta = f(beta);
        alpha += rs[t];
        if (!(beta == Rat(alpha, n)))
            return {true, false,
                    "t=" + std::to_string(t + 1) + ": beta=" + beta.str() + " alpha/n=" +
                        Rat(alpha, n).str() + " on " + dump_config(c)};
    }
    return {};
}

TrialOutcome law_pq(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, std::max<std::int64_t>(2, n_max));
    std::uniform_int_distribution<std::int64_t> qd(2, n);
    std::int64_t q = qd(rng);
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 1; 2 * p <= q; ++p)
        if (std::gcd(p, q) == 1) ps.push_back(p);
    if (ps.empty()) return {false, true, ""};
    std::uniform_int_distribution<std::size_t> pd(0, ps.size() - 1);
    std::int64_t p = ps[pd(rng)];
    SimulationSummary s = simulate_to_cycle(pq_construction(n, p, q));
    if (!(s.activity == Rat(p, q)) || static_cast<std::int64_t>(s.period) != q)
        return {true, false,
                "n=" + std::to_string(n) + " p/q=" + std::to_string(p) + "/" + std::to_string(q) +
                    " gave " + s.activity.str() + " period " + std::to_string(s.period)};
    return {};
}

TrialOutcome law_brute_force(std::mt19937_64& rng, std::int64_t n_max) {
    std::int64_t n = random_n(rng, std::min<std::int64_t>(n_max, 8));
    ChipConfig c = random_config(rng, n, 0, 2 * n);
    SimulationSummary fast = simulate_to_cycle(c);
    SimulationSummary ref = reference::simulate_to_cycle_hashing(c);
    if (fast.transient != ref.transient || fast.period != ref.period ||
        !(fast.activity == ref.activity))
        return {true, false,
                "residue (" + std::to_string(fast.transient) + "," + std::to_string(fast.period) +
                    "," + fast.activity.str() + ") vs hashing (" + std::to_string(ref.transient) +
                    "," + std::to_string(ref.period) + "," + ref.activity.str() + ") on " +
                    dump_config(c)};
    return {};
}

using LawFn = std::function<LawReport(const LawParams&)>;

std::map<std::string, LawFn, std::less<>> make_registry() {
    std::map<std::string, LawFn, std::less<>> reg;
    auto simple = [](const char* name, TrialOutcome (*fn)(std::mt19937_64&, std::int64_t)) {
        return std::pair<std::string, LawFn>(
            name, [name, fn](const LawParams& p) {
                return run_trials(name, p, [fn, &p](std::mt19937_64& rng, std::uint64_t) {
                    return fn(rng, p.n_max);
                });
            });
    };
    reg.insert(simple("conservation", law_conservation));
    reg.insert(simple("congruence", law_congruence));
    reg.insert(simple("odometer_identity", law_odometer_identity));
    reg.insert(simple("period_bound", law_period_bound));
    reg.insert(simple("denominator_lemma", law_denominator));
    reg.insert(simple("divisibility", law_divisibility));
    reg.insert(simple("interlacing", law_interlacing));
    reg.insert(simple("constant_odometer", law_constant_odometer));
    reg.insert(simple("u2_lemma", law_u2));
    reg.insert(simple("reflection", law_reflection));
    reg.insert(simple("conjugation", law_conjugation));
    reg.insert(simple("functoriality", law_functoriality));
    reg.insert(simple("lift_iterates", law_lift_iterates));
    reg.insert(simple("pq_construction", law_pq));
    reg.insert(simple("brute_force", law_brute_force));
    reg.emplace("period2_window", [](const LawParams& p) {
        return run_trials("period2_window", p, [&p](std::mt19937_64& rng, std::uint64_t i) {
            return law_period2_window(rng, i, p.n_max);
        });
    });
    return reg;
}

const std::map<std::string, LawFn, std::less<>>& registry() {
    static const auto reg = make_registry();
    return reg;
}

}  // namespace

LawReport check_law(std::string_view law_id, const LawParams& params) {
    auto it = registry().find(law_id);
    if (it == registry().end())
        throw UnknownLaw("unknown law '" + std::string(law_id) + "'");
    return it->second(params);
}

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry()) v.push_back(k);
        return v;
    }();
    return ids;
}

}  // namespace chipfire
