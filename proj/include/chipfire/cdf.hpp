#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chipfire/lift.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

// A continuous CDF F on [0,1] with F(0)=0, F(1)=1, defining the continuum
// limit of a configuration family.
struct CdfSpec {
    enum class Kind { Slope2, Sqrt, Sine, Table };

    Kind kind = Kind::Slope2;
    // For Kind::Table: piecewise-linear samples (x_i, F(x_i)), x strictly
    // increasing, endpoints (0,0) and (1,1).
    std::vector<std::pair<Rat, Rat>> table;

    static CdfSpec slope2();
    static CdfSpec sqrt();
    static CdfSpec sine();
    static CdfSpec from_table(std::vector<std::pair<Rat, Rat>> pts);  // throws InvalidCdf
    static CdfSpec by_name(const std::string& name);                  // slope2|sqrt|sine

    // slope2 and tables admit exact lifts; sqrt and sine are polygonalized.
    bool polygonal() const { return kind == Kind::Slope2 || kind == Kind::Table; }

    double eval(double x) const;  // F(x), clamped to [0,1] domain
};

// Lift of Phi_y = R_y . Phi with Phi(x) = ceil(x) - F(ceil(x) - x).
// Exact for polygonal F.
ExactLift lift_from_cdf_exact(const CdfSpec& F, const Rat& y);

// Polygonalized on a uniform grid with `grid` segments (non-polygonal F);
// also usable for polygonal F (sampled exactly at grid points).
FloatLift lift_from_cdf(const CdfSpec& F, double y, std::int64_t grid = 1 << 14);

}  // namespace chipfire
