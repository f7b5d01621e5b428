#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/config.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

struct StepRecord {
    std::uint64_t t = 0;      // step index
    std::int64_t r = 0;       // vertices fired at step t
    std::int64_t alpha = 0;   // cumulative firings through step t (alpha_0 = 0)
};

struct CycleWitness {
    std::uint64_t s = 0;  // U^s sigma == U^t sigma
    std::uint64_t t = 0;
};

struct SimulationSummary {
    std::uint64_t transient = 0;        // t0, exact
    std::uint64_t period = 1;           // m, exact minimal period
    Rat activity;                       // a(sigma), reduced, in [0,1]
    CycleWitness witness;
    std::vector<StepRecord> alpha_trace;  // filled only when requested
};

struct SimulateOptions {
    std::uint64_t max_steps = 0;   // 0: default budget 64*n^2
    bool record_trace = false;
    bool fast_confined_stepper = true;  // residue iteration on the sorted snapshot
};

std::uint64_t default_budget(std::int64_t n);

// Runs U until the eventual cycle is certified and returns exact transient,
// period and activity.  Detection: r==0 / r==n fixed-point short-circuits,
// otherwise alpha-mod-n residues on confined states (a repeated residue at
// confined times s<t certifies U^s sigma == U^t sigma).  Throws
// BudgetExceeded if no cycle is certified within the budget.
SimulationSummary simulate_to_cycle(const ChipConfig& c, const SimulateOptions& opt = {});
SimulationSummary simulate_to_cycle(const ChipConfig& c, std::uint64_t max_steps);

// a(sigma) only.
Rat activity(const ChipConfig& c, std::uint64_t max_steps = 0);

// r(U^t sigma) for t = 0..steps-1, by direct iteration.
std::vector<std::int64_t> firing_sequence(const ChipConfig& c, std::uint64_t steps);

struct OdometerTrace {
    std::vector<std::int64_t> u;  // u_t(sigma, v), firings of v in first t updates
    std::int64_t alpha = 0;       // sum of u
};

// Per-vertex firing counts over the first t updates.
OdometerTrace odometer(const ChipConfig& c, std::uint64_t t);

}  // namespace chipfire
