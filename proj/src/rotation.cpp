#include "chipfire/rotation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chipfire/errors.hpp"

namespace chipfire {

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
    if (hi < lo) throw InvalidParams("empty interval");
    // Stern-Brocot descent: take the integer if one fits, otherwise strip
    // the integer part and recurse on the reciprocal interval.
    std::int64_t c = lo.ceil();
    if (Rat(c) <= hi) return Rat(c);
    std::int64_t a = lo.floor();
    Rat inner = simplest_in_interval(Rat(1) / (hi - Rat(a)), Rat(1) / (lo - Rat(a)));
    return Rat(a) + Rat(1) / inner;
}

namespace {
// x*u - y*v = 1 for coprime x,y (y > 0)
void bezout(std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& v) {
    // extended gcd
    std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    // r0 == gcd == 1; s0*x + t0*y == 1
    u = s0;
    v = -t0;
}
}  // namespace

Rat farey_next(const Rat& x, std::int64_t q_max) {
    if (q_max < 1) throw InvalidParams("q_max must be positive");
    // reduce to the fractional part so p >= 0
    std::int64_t whole = x.floor();
    Rat fr = x - Rat(whole);
    std::int64_t p = fr.num(), q = fr.den();
    if (p == 0) return Rat(whole) + Rat(1, q_max);
    // successor r/s of p/q in the Farey sequence of order q_max satisfies
    // r*q - s*p == 1 with s maximal <= q_max
    std::int64_t r0, s0;
    bezout(q, p, r0, s0);
    std::int64_t r = r0, s = s0;
    while (s > q_max) {
        r -= p;
        s -= q;
    }
    while (s + q <= q_max) {
        r += p;
        s += q;
    }
    return Rat(whole) + Rat(r, s);
}

std::vector<Rat> fractions_in_interval(const Rat& lo, const Rat& hi, std::int64_t q_max,
                                       std::size_t limit) {
    std::vector<Rat> out;
    if (hi < lo || q_max < 1) return out;
    // first Farey(q_max) fraction >= lo, by scanning denominators
    Rat first(0);
    bool have = false;
    for (std::int64_t q = 1; q <= q_max; ++q) {
        // smallest p with p/q >= lo
        Rat scaled = lo * Rat(q);
        Rat cand(scaled.ceil(), q);
        if (!have || cand < first) {
            first = cand;
            have = true;
        }
    }
    Rat f = first;
    while (!(hi < f)) {
        out.push_back(f);
        if (out.size() > limit) break;
        f = farey_next(f, q_max);
    }
    return out;
}

namespace {

template <class Lift>
double orbit_endpoint_double(const Lift& f, std::uint64_t t_max);

template <>
double orbit_endpoint_double<FloatLift>(const FloatLift& f, std::uint64_t t_max) {
    double x = 0;
    for (std::uint64_t i = 0; i < t_max; ++i) x = f(x);
    return x;
}

template <>
double orbit_endpoint_double<ExactLift>(const ExactLift& f, std::uint64_t t_max) {
    // exact orbit while the denominators stay in range, then float
    Rat x(0);
    std::uint64_t done = 0;
    try {
        for (; done < t_max; ++done) x = f(x);
        return x.to_double();
    } catch (const std::overflow_error&) {
        FloatLift g = to_float(f);
        double xd = x.to_double();
        for (; done < t_max; ++done) xd = g(xd);
        return xd;
    }
}

bool plateau_certifies(const ExactLift& f, std::int64_t p, std::int64_t q) {
    ExactLift h = iterate_lift(f, static_cast<std::uint64_t>(q));
    return !(max_displacement(h) < Rat(p)) && !(Rat(p) < min_displacement(h));
}

// Witness scan: f^q evaluated pointwise at f's breakpoints.  Conservative
// (may miss witnesses living at interior kinks of f^q), never wrong.
bool plateau_certifies(const FloatLift& f, std::int64_t p, std::int64_t q) {
    const double eps = 1e-9;
    bool ge = false, le = false;
    for (std::size_t i = 0; i < f.size() && !(ge && le); ++i) {
        double x = f.xs[i];
        double v = x;
        for (std::int64_t k = 0; k < q; ++k) v = f(v);
        double dev = v - x;
        if (dev >= p - eps) ge = true;
        if (dev <= p + eps) le = true;
    }
    return ge && le;
}

template <class Lift>
RotationEstimate rotation_numeric_impl(const Lift& f, std::uint64_t t_max, std::int64_t q_max) {
    if (t_max < 1 || q_max < 1) throw InvalidParams("t_max and q_max must be positive");
    RotationEstimate est;
    est.iterations = t_max;
    double a_t = orbit_endpoint_double(f, t_max);
    double t = static_cast<double>(t_max);
    est.lower = (a_t - 1.0) / t;
    est.upper = (a_t + 1.0) / t;
    est.value = 0.5 * (est.lower + est.upper);

    // widen by an fp cushion before hunting for the unique snap candidate
    double pad = 1e-9 * (1.0 + std::fabs(a_t));
    auto cands = fractions_in_interval(Rat::from_double(est.lower - pad),
                                       Rat::from_double(est.upper + pad), q_max, 1);
    if (cands.size() == 1) {
        const Rat& c = cands.front();
        bool ok = false;
        try {
            ok = plateau_certifies(f, c.num(), c.den());
        } catch (const std::overflow_error&) {
            ok = false;  // exact composition outgrew 64 bits; stay unsnapped
        }
        if (ok) {
            est.snapped = c;
            est.value = c.to_double();
        }
    }
    return est;
}

}  // namespace

RotationEstimate rotation_number_numeric(const ExactLift& f, std::uint64_t t_max,
                                         std::int64_t q_max) {
    return rotation_numeric_impl(f, t_max, q_max);
}

RotationEstimate rotation_number_numeric(const FloatLift& f, std::uint64_t t_max,
                                         std::int64_t q_max) {
    return rotation_numeric_impl(f, t_max, q_max);
}

Rat rotation_number_exact(const ChipConfig& c, std::uint64_t max_steps) {
    SimulateOptions opt;
    opt.max_steps = max_steps;
    SimulationSummary sum = simulate_to_cycle(c, opt);
    const Rat a = sum.activity;

    // second route: one full period of the cycle advances beta_{t0} by
    // exactly period * a on the lift
    ExactLift f = lift_from_config(c);
    Rat beta = iterate(f, Rat(0), sum.transient);
    Rat after = iterate(f, beta, sum.period);
    Rat expect = beta + Rat(static_cast<std::int64_t>(sum.period)) * a;
    if (!(after == expect))
        throw Error("rotation/activity disagreement: lift route " + after.str() +
                    " vs simulation route " + expect.str());
    return a;
}

StairInterval stair_interval(const CdfSpec& F, std::int64_t p, std::int64_t q, double tol,
                             std::int64_t grid) {
    if (q < 1 || p < 0 || p > q || std::gcd(p, q) != 1)
        throw InvalidParams("need 0 <= p <= q, gcd(p,q)=1");
    if (!(tol > 0)) throw InvalidParams("tol must be positive");

    const bool exact = F.polygonal();
    const double eps = 1e-9;

    auto pred_ge = [&](double y) {  // rho(Phi_y) >= p/q
        if (exact) {
            ExactLift h = iterate_lift(lift_from_cdf_exact(F, Rat::from_double(y)),
                                       static_cast<std::uint64_t>(q));
            return !(max_displacement(h) < Rat(p));
        }
        FloatLift h = iterate_lift(lift_from_cdf(F, y, grid), static_cast<std::uint64_t>(q));
        return max_displacement(h) >= p - eps;
    };
    auto pred_le = [&](double y) {  // rho(Phi_y) <= p/q
        if (exact) {
            ExactLift h = iterate_lift(lift_from_cdf_exact(F, Rat::from_double(y)),
                                       static_cast<std::uint64_t>(q));
            return !(Rat(p) < min_displacement(h));
        }
        FloatLift h = iterate_lift(lift_from_cdf(F, y, grid), static_cast<std::uint64_t>(q));
        return min_displacement(h) <= p + eps;
    };

    StairInterval out;

    // left endpoint: pred_ge is monotone in y, false below a, true at/above
    if (pred_ge(0.0)) {
        out.a = 0.0;
    } else {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > tol * 0.25) {
            double mid = 0.5 * (lo + hi);
            (pred_ge(mid) ? hi : lo) = mid;
        }
        out.a = 0.5 * (lo + hi);
    }

    // right endpoint: pred_le true at/below b, false above
    if (pred_le(1.0)) {
        out.b = 1.0;
    } else {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > tol * 0.25) {
            double mid = 0.5 * (lo + hi);
            (pred_le(mid) ? lo : hi) = mid;
        }
        out.b = 0.5 * (lo + hi);
    }

    if (out.b - out.a < tol) throw DegenerateStair(out.a, out.b, tol);
    return out;
}

}  // namespace chipfire
