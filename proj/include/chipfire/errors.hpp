#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chipfire {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simulation did not certify a cycle within the step budget.
struct BudgetExceeded : Error {
    std::uint64_t steps = 0;
    std::int64_t k = -1;  // offending sweep row, when raised inside a sweep

    explicit BudgetExceeded(std::uint64_t steps_, std::int64_t k_ = -1)
        : Error(k_ < 0 ? "no cycle certified within " + std::to_string(steps_) + " steps"
                       : "no cycle certified within " + std::to_string(steps_) +
                             " steps (sweep row k=" + std::to_string(k_) + ")"),
          steps(steps_),
          k(k_) {}
};

struct NotPreconfined : Error {
    using Error::Error;
};

struct InvalidCdf : Error {
    using Error::Error;
};

// Stair bisection collapsed below tolerance (possibly empty or point fiber).
struct DegenerateStair : Error {
    double a = 0, b = 0;

    DegenerateStair(double a_, double b_, double tol)
        : Error("stair width " + std::to_string(b_ - a_) + " below tolerance " +
                std::to_string(tol)),
          a(a_),
          b(b_) {}
};

struct InvalidParams : Error {
    using Error::Error;
};

struct NegativeHeight : Error {
    using Error::Error;
};

struct HeightTooLarge : Error {
    using Error::Error;
};

struct UnknownLaw : Error {
    using Error::Error;
};

}  // namespace chipfire
