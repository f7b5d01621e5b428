#pragma once

#include "chipfire/simulate.hpp"

namespace chipfire::reference {

// Naive cycle detector: hashes every full state until one repeats.
// O(t * n) memory; kept as a test oracle and benchmark baseline for the
// residue detector in simulate_to_cycle.
SimulationSummary simulate_to_cycle_hashing(const ChipConfig& c, std::uint64_t max_steps = 0);

}  // namespace chipfire::reference
