#pragma once

#include <cstdint>
#include <optional>

#include "chipfire/cdf.hpp"
#include "chipfire/lift.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/simulate.hpp"

namespace chipfire {

struct RotationEstimate {
    double value = 0;       // snapped value when exact, bracket midpoint otherwise
    double lower = 0;       // certified bracket [ (a_t-1)/t, (a_t+1)/t ]
    double upper = 0;
    std::optional<Rat> snapped;  // set when the plateau test certifies p/q
    std::uint64_t iterations = 0;

    bool exact() const { return snapped.has_value(); }
};

// Fraction with the smallest denominator in [lo, hi] (Stern-Brocot walk).
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

// Successor of p/q in the Farey sequence of order q_max.
Rat farey_next(const Rat& x, std::int64_t q_max);

// All reduced fractions with denominator <= q_max in [lo, hi]; stops early
// once more than `limit` are found.
std::vector<Rat> fractions_in_interval(const Rat& lo, const Rat& hi, std::int64_t q_max,
                                       std::size_t limit = 2);

// Iterates a_t = f^t(0) for the bracket, then tries to snap to the unique
// p/q with q <= q_max inside it.  Snapping is certified by the plateau test
// on f^q: some x with f^q(x) >= x+p and some x with f^q(x) <= x+p (exact
// comparisons for exact lifts, eps-slack for float lifts).
RotationEstimate rotation_number_numeric(const ExactLift& f, std::uint64_t t_max,
                                         std::int64_t q_max);
RotationEstimate rotation_number_numeric(const FloatLift& f, std::uint64_t t_max,
                                         std::int64_t q_max);

// Exact rho of lift_from_config(c): equals a(c); computes both routes
// (simulation activity and the lift's periodic point f^q(beta_{t0}) ==
// beta_{t0} + p) and asserts agreement.
Rat rotation_number_exact(const ChipConfig& c, std::uint64_t max_steps = 0);

struct StairInterval {
    double a = 0;
    double b = 0;
    double width() const { return b - a; }
};

// Endpoints of the fiber s^{-1}(p/q) for s(y) = rho(R_y . Phi), to within
// tol, by bisection on the monotone criteria
//   rho(Phi_y) >= p/q  iff  exists x: Phi_y^q(x) - x >= p
//   rho(Phi_y) <= p/q  iff  exists x: Phi_y^q(x) - x <= p.
// Throws DegenerateStair if the detected width is below tol.
StairInterval stair_interval(const CdfSpec& F, std::int64_t p, std::int64_t q, double tol,
                             std::int64_t grid = 1 << 14);

}  // namespace chipfire
