#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "chipfire/config.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

namespace num {
inline std::int64_t floor_of(const Rat& x) { return x.floor(); }
inline std::int64_t floor_of(double x) { return static_cast<std::int64_t>(std::floor(x)); }
inline Rat from_int(std::int64_t k, const Rat&) { return Rat(k); }
inline double from_int(std::int64_t k, double) { return static_cast<double>(k); }
}  // namespace num

// Monotone degree-one lift of a circle map: continuous, nondecreasing,
// f(x+1) = f(x) + 1.  Stored as one period of a piecewise-linear function:
// breakpoints xs in [0,1) with xs[0] == 0, values ys; the segment from
// (xs.back, ys.back) closes to (1, ys[0]+1).
//
// T = Rat gives exact lifts (config lifts have all coordinates over
// denominator n); T = double gives polygonalized continuum lifts.
template <class T>
struct MonotoneLift {
    std::vector<T> xs;
    std::vector<T> ys;

    std::size_t size() const { return xs.size(); }

    T f0() const { return ys.front(); }

    // f(x) for any real x, via the degree-one extension.
    T operator()(const T& x) const {
        std::int64_t k = num::floor_of(x);
        T u = x - num::from_int(k, x);
        T shift = num::from_int(k, x);
        // u in [0,1); find segment
        auto it = std::upper_bound(xs.begin(), xs.end(), u);
        std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
        if (xs[i] == u) return ys[i] + shift;
        const T& x0 = xs[i];
        const T& y0 = ys[i];
        T x1 = (i + 1 < xs.size()) ? xs[i + 1] : num::from_int(1, x);
        T y1 = (i + 1 < xs.size()) ? ys[i + 1] : ys.front() + num::from_int(1, x);
        if (y1 == y0) return y0 + shift;  // plateau
        return y0 + (u - x0) * (y1 - y0) / (x1 - x0) + shift;
    }

    // Structural sanity: xs strictly increasing from 0, ys nondecreasing,
    // monotone across the wrap.
    bool well_formed() const {
        if (xs.empty() || xs.size() != ys.size()) return false;
        if (!(xs.front() == num::from_int(0, xs.front()))) return false;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (!(xs[i - 1] < xs[i])) return false;
            if (ys[i] < ys[i - 1]) return false;
        }
        if (!(xs.back() < num::from_int(1, xs.back()))) return false;
        if (ys.front() + num::from_int(1, ys.front()) < ys.back()) return false;
        return true;
    }
};

using ExactLift = MonotoneLift<Rat>;
using FloatLift = MonotoneLift<double>;

// Lift of the generalized configuration psi(sigma): piecewise linear with
// breakpoints at j/n, integer slopes from height multiplicities,
// f(0) = r(sigma)/n.  Requires sigma preconfined (all heights <= 2n-1).
ExactLift lift_from_config(const ChipConfig& c);

// Uf = R_{-f(0)} . f . R_{f(0)}; rotation number preserved.
template <class T>
MonotoneLift<T> update_lift(const MonotoneLift<T>& f);

// h = f . g (both monotone degree-one lifts, so is h).  Breakpoints are g's
// breakpoints plus exact preimages under g of f's breakpoints.
template <class T>
MonotoneLift<T> compose(const MonotoneLift<T>& f, const MonotoneLift<T>& g);

// f^q by repeated composition (q >= 1).
template <class T>
MonotoneLift<T> iterate_lift(const MonotoneLift<T>& f, std::uint64_t q);

// f^t(x0) by repeated evaluation; exact when T = Rat.
template <class T>
T iterate(const MonotoneLift<T>& f, T x0, std::uint64_t t) {
    for (std::uint64_t i = 0; i < t; ++i) x0 = f(x0);
    return x0;
}

// max/min of f(x) - x over one period (attained at breakpoints).
template <class T>
T max_displacement(const MonotoneLift<T>& f);
template <class T>
T min_displacement(const MonotoneLift<T>& f);

FloatLift to_float(const ExactLift& f);

// Exact equality as functions (piecewise-linear lifts agree iff they agree
// on the union of their breakpoints).
bool lifts_equal(const ExactLift& a, const ExactLift& b);

extern template struct MonotoneLift<Rat>;
extern template struct MonotoneLift<double>;
extern template MonotoneLift<Rat> update_lift<Rat>(const MonotoneLift<Rat>&);
extern template MonotoneLift<double> update_lift<double>(const MonotoneLift<double>&);
extern template MonotoneLift<Rat> compose<Rat>(const MonotoneLift<Rat>&, const MonotoneLift<Rat>&);
extern template MonotoneLift<double> compose<double>(const MonotoneLift<double>&,
                                                     const MonotoneLift<double>&);
extern template MonotoneLift<Rat> iterate_lift<Rat>(const MonotoneLift<Rat>&, std::uint64_t);
extern template MonotoneLift<double> iterate_lift<double>(const MonotoneLift<double>&,
                                                          std::uint64_t);
extern template Rat max_displacement<Rat>(const MonotoneLift<Rat>&);
extern template double max_displacement<double>(const MonotoneLift<double>&);
extern template Rat min_displacement<Rat>(const MonotoneLift<Rat>&);
extern template double min_displacement<double>(const MonotoneLift<double>&);

}  // namespace chipfire
