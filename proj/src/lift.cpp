#include "chipfire/lift.hpp"

#include <algorithm>
#include <utility>

namespace chipfire {

ExactLift lift_from_config(const ChipConfig& c) {
    const std::int64_t n = c.n();
    if (!is_preconfined(c)) throw NotPreconfined("lift requires all heights <= 2n-1");

    // psi(sigma) puts mass 1/n uniformly on [sigma(v)/n, (sigma(v)+1)/n),
    // so the density of mu is the height multiplicity: d(x) = mult[floor(nx)].
    // Integrating nu over (1-y,1] and (2-y,2] gives integer slope
    // mult[n-1-j] + mult[2n-1-j] on segment j, with f(0) = r(sigma)/n.
    std::vector<std::int64_t> mult(2 * n, 0);
    for (auto hv : c.heights()) ++mult[hv];

    std::vector<std::int64_t> vals(n + 1);
    vals[0] = firing_count(c);
    for (std::int64_t j = 0; j < n; ++j)
        vals[j + 1] = vals[j] + mult[n - 1 - j] + mult[2 * n - 1 - j];

    ExactLift f;
    f.xs.reserve(n);
    f.ys.reserve(n);
    for (std::int64_t j = 0; j < n; ++j) {
        f.xs.push_back(Rat(j, n));
        f.ys.push_back(Rat(vals[j], n));
    }
    return f;
}

namespace {

// Sorts kink candidates by x, drops exact coincidences (continuity makes
// their values agree), and returns the lift.  Callers guarantee x = 0 is
// among the points.
template <class T>
MonotoneLift<T> from_points(std::vector<std::pair<T, T>> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    MonotoneLift<T> out;
    out.xs.reserve(pts.size());
    out.ys.reserve(pts.size());
    for (auto& [x, y] : pts) {
        if (!out.xs.empty() && out.xs.back() == x) continue;
        out.xs.push_back(x);
        out.ys.push_back(y);
    }
    return out;
}

}  // namespace

template <class T>
MonotoneLift<T> update_lift(const MonotoneLift<T>& f) {
    // Uf(y) = f(y + c) - c with c = f(0); kinks move to frac(x_i - c).
    const T c = f.f0();
    std::vector<std::pair<T, T>> pts;
    pts.reserve(f.size() + 1);
    bool have_zero = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        T shifted = f.xs[i] - c;
        std::int64_t m = -num::floor_of(shifted);
        T d = shifted + num::from_int(m, shifted);
        if (d == num::from_int(0, d)) have_zero = true;
        pts.emplace_back(d, f.ys[i] + num::from_int(m, c) - c);
    }
    if (!have_zero) {
        T zero = num::from_int(0, c);
        pts.emplace_back(zero, f(c) - c);
    }
    return from_points(std::move(pts));
}

template <class T>
MonotoneLift<T> compose(const MonotoneLift<T>& f, const MonotoneLift<T>& g) {
    std::vector<std::pair<T, T>> pts;
    const std::size_t gn = g.size();
    pts.reserve(gn + f.size() + 4);

    const T one = num::from_int(1, g.xs.front());

    // h = f.g kinks at g's kinks...
    for (std::size_t i = 0; i < gn; ++i) pts.emplace_back(g.xs[i], f(g.ys[i]));

    // ...plus preimages under g of f's kinks: each g segment spanning
    // values (v0, v1) crosses every f-kink position b+m strictly inside.
    for (std::size_t i = 0; i < gn; ++i) {
        const T& x0 = g.xs[i];
        const T& v0 = g.ys[i];
        T x1 = (i + 1 < gn) ? g.xs[i + 1] : one;
        T v1 = (i + 1 < gn) ? g.ys[i + 1] : g.ys.front() + one;
        if (!(v0 < v1)) continue;  // plateau
        for (std::int64_t m = num::floor_of(v0);; ++m) {
            T mm = num::from_int(m, v0);
            if (!(mm < v1)) break;
            for (std::size_t j = 0; j < f.size(); ++j) {
                T b = f.xs[j] + mm;
                if (v0 < b && b < v1) {
                    // divide before multiplying: the ratio reduces, which
                    // keeps exact denominators in range
                    T x = x0 + (b - v0) / (v1 - v0) * (x1 - x0);
                    pts.emplace_back(x, f.ys[j] + mm);
                }
            }
        }
    }
    // x = 0 is a g kink, so it survives into pts.
    return from_points(std::move(pts));
}

template <class T>
MonotoneLift<T> iterate_lift(const MonotoneLift<T>& f, std::uint64_t q) {
    MonotoneLift<T> h = f;
    for (std::uint64_t i = 1; i < q; ++i) h = compose(f, h);
    return h;
}

template <class T>
T max_displacement(const MonotoneLift<T>& f) {
    T best = f.ys[0] - f.xs[0];
    for (std::size_t i = 1; i < f.size(); ++i) {
        T d = f.ys[i] - f.xs[i];
        if (best < d) best = d;
    }
    return best;
}

template <class T>
T min_displacement(const MonotoneLift<T>& f) {
    T best = f.ys[0] - f.xs[0];
    for (std::size_t i = 1; i < f.size(); ++i) {
        T d = f.ys[i] - f.xs[i];
        if (d < best) best = d;
    }
    return best;
}

FloatLift to_float(const ExactLift& f) {
    FloatLift out;
    out.xs.reserve(f.size());
    out.ys.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.xs.push_back(f.xs[i].to_double());
        out.ys.push_back(f.ys[i].to_double());
    }
    return out;
}

bool lifts_equal(const ExactLift& a, const ExactLift& b) {
    std::vector<Rat> grid;
    grid.reserve(a.size() + b.size());
    grid.insert(grid.end(), a.xs.begin(), a.xs.end());
    grid.insert(grid.end(), b.xs.begin(), b.xs.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const auto& x : grid)
        if (!(a(x) == b(x))) return false;
    return true;
}

template struct MonotoneLift<Rat>;
template struct MonotoneLift<double>;
template MonotoneLift<Rat> update_lift<Rat>(const MonotoneLift<Rat>&);
template MonotoneLift<double> update_lift<double>(const MonotoneLift<double>&);
template MonotoneLift<Rat> compose<Rat>(const MonotoneLift<Rat>&, const MonotoneLift<Rat>&);
template MonotoneLift<double> compose<double>(const MonotoneLift<double>&,
                                              const MonotoneLift<double>&);
template MonotoneLift<Rat> iterate_lift<Rat>(const MonotoneLift<Rat>&, std::uint64_t);
template MonotoneLift<double> iterate_lift<double>(const MonotoneLift<double>&, std::uint64_t);
template Rat max_displacement<Rat>(const MonotoneLift<Rat>&);
template double max_displacement<double>(const MonotoneLift<double>&);
template Rat min_displacement<Rat>(const MonotoneLift<Rat>&);
template double min_displacement<double>(const MonotoneLift<double>&);

}  // namespace chipfire
