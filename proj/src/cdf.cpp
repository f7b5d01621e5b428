#include "chipfire/cdf.hpp"

#include <cmath>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {
constexpr double kPi = 3.14159265358979323846;

// slope2 histogram: 0 below 1/4, 2x - 1/2 in the middle, 1 above 3/4.
const std::vector<std::pair<Rat, Rat>>& slope2_points() {
    static const std::vector<std::pair<Rat, Rat>> pts = {
        {Rat(0), Rat(0)}, {Rat(1, 4), Rat(0)}, {Rat(3, 4), Rat(1)}, {Rat(1), Rat(1)}};
    return pts;
}
}  // namespace

CdfSpec CdfSpec::slope2() {
    CdfSpec s;
    s.kind = Kind::Slope2;
    s.table = slope2_points();
    return s;
}

CdfSpec CdfSpec::sqrt() {
    CdfSpec s;
    s.kind = Kind::Sqrt;
    return s;
}

CdfSpec CdfSpec::sine() {
    CdfSpec s;
    s.kind = Kind::Sine;
    return s;
}

CdfSpec CdfSpec::from_table(std::vector<std::pair<Rat, Rat>> pts) {
    if (pts.size() < 2) throw InvalidCdf("table needs at least the two endpoints");
    if (!(pts.front().first == Rat(0)) || !(pts.front().second == Rat(0)))
        throw InvalidCdf("table must start at (0,0)");
    if (!(pts.back().first == Rat(1)) || !(pts.back().second == Rat(1)))
        throw InvalidCdf("table must end at (1,1)");
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i - 1].first < pts[i].first)) throw InvalidCdf("x values must increase");
        if (pts[i].second < pts[i - 1].second) throw InvalidCdf("F must be nondecreasing");
    }
    CdfSpec s;
    s.kind = Kind::Table;
    s.table = std::move(pts);
    return s;
}

CdfSpec CdfSpec::by_name(const std::string& name) {
    if (name == "slope2") return slope2();
    if (name == "sqrt") return sqrt();
    if (name == "sine") return sine();
    throw InvalidCdf("unknown cdf '" + name + "' (want slope2|sqrt|sine or a table file)");
}

double CdfSpec::eval(double x) const {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    switch (kind) {
        case Kind::Sqrt:
            return std::sqrt(x);
        case Kind::Sine:
            return x + std::sin(2 * kPi * x) / (2 * kPi);
        case Kind::Slope2:
        case Kind::Table: {
            // linear interpolation on the table
            std::size_t lo = 0, hi = table.size() - 1;
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                if (table[mid].first.to_double() <= x)
                    lo = mid;
                else
                    hi = mid;
            }
            double x0 = table[lo].first.to_double(), x1 = table[hi].first.to_double();
            double y0 = table[lo].second.to_double(), y1 = table[hi].second.to_double();
            return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
        }
    }
    return x;
}

ExactLift lift_from_cdf_exact(const CdfSpec& F, const Rat& y) {
    if (!F.polygonal()) throw InvalidCdf("exact lift needs a polygonal cdf (slope2 or table)");
    if (y < Rat(0) || Rat(1) < y) throw InvalidParams("y must lie in [0,1]");
    // Phi(x) = ceil(x) - F(ceil(x) - x); on [0,1) that is 1 - F(1-x) with
    // Phi(0) = 0, so Phi_y kinks at 1 - x_i for interior table points.
    ExactLift f;
    f.xs.reserve(F.table.size());
    f.ys.reserve(F.table.size());
    f.xs.push_back(Rat(0));
    f.ys.push_back(y);
    for (auto it = F.table.rbegin(); it != F.table.rend(); ++it) {
        Rat x = Rat(1) - it->first;
        if (x == Rat(0) || x == Rat(1)) continue;  // endpoints fold into the 0 kink and wrap
        f.xs.push_back(x);
        f.ys.push_back(y + Rat(1) - it->second);
    }
    return f;
}

FloatLift lift_from_cdf(const CdfSpec& F, double y, std::int64_t grid) {
    if (grid < 2) throw InvalidParams("grid must be at least 2");
    if (y < 0 || y > 1) throw InvalidParams("y must lie in [0,1]");
    FloatLift f;
    f.xs.reserve(grid);
    f.ys.reserve(grid);
    for (std::int64_t i = 0; i < grid; ++i) {
        double x = static_cast<double>(i) / static_cast<double>(grid);
        f.xs.push_back(x);
        f.ys.push_back(y + 1.0 - F.eval(1.0 - x));
    }
    return f;
}

}  // namespace chipfire
