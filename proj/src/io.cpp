#include "chipfire/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace chipfire::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

void write_diagram_csv(std::ostream& os, const PhaseDiagram& d) {
    os << "k,activity_num,activity_den,period,transient\n";
    for (const auto& row : d.rows)
        os << row.k << ',' << row.activity.num() << ',' << row.activity.den() << ','
           << row.period << ',' << row.transient << '\n';
}

PhaseDiagram read_diagram_csv(std::istream& is) {
    PhaseDiagram d;
    std::string line;
    if (!std::getline(is, line)) throw Error("empty diagram csv");
    if (trim(line) != "k,activity_num,activity_den,period,transient")
        throw Error("bad diagram csv header: " + line);
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 5) throw Error("bad diagram csv row: " + line);
        DiagramRow row;
        row.k = std::stoll(f[0]);
        row.activity = Rat(std::stoll(f[1]), std::stoll(f[2]));
        row.period = std::stoull(f[3]);
        row.transient = std::stoull(f[4]);
        d.rows.push_back(row);
    }
    d.n = static_cast<std::int64_t>(d.rows.size()) - 1;
    return d;
}

void write_staircase_csv(std::ostream& os, const std::vector<StaircasePoint>& pts) {
    os << "y,rot_lower,rot_upper,snapped_num,snapped_den\n";
    for (const auto& p : pts) {
        os << fmt_double(p.y) << ',' << fmt_double(p.rot.lower) << ',' << fmt_double(p.rot.upper)
           << ',';
        if (p.rot.snapped)
            os << p.rot.snapped->num() << ',' << p.rot.snapped->den();
        else
            os << ',';
        os << '\n';
    }
}

std::string summary_json(const ChipConfig& c, std::int64_t k, const SimulationSummary& s,
                         bool include_trace) {
    ordered_json j;
    j["n"] = c.n();
    j["k"] = k;
    j["total_chips"] = c.total_chips();
    j["activity"] = s.activity.str_frac();
    j["period"] = s.period;
    j["transient"] = s.transient;
    j["witness"] = {{"s", s.witness.s}, {"t", s.witness.t}};
    if (include_trace) {
        ordered_json tr = ordered_json::array();
        for (const auto& rec : s.alpha_trace)
            tr.push_back({{"t", rec.t}, {"r", rec.r}, {"alpha", rec.alpha}});
        j["alpha_trace"] = std::move(tr);
    }
    return j.dump(2) + "\n";
}

std::string diagram_json(const PhaseDiagram& d) {
    ordered_json j;
    j["family"] = d.family;
    j["n"] = d.n;
    ordered_json rows = ordered_json::array();
    for (const auto& row : d.rows)
        rows.push_back({{"k", row.k},
                        {"activity", row.activity.str_frac()},
                        {"period", row.period},
                        {"transient", row.transient}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string stair_json(double a, double b, double tol) {
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["width"] = b - a;
    j["tol"] = tol;
    return j.dump(2) + "\n";
}

std::string law_reports_json(const std::vector<LawReport>& reports) {
    ordered_json arr = ordered_json::array();
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        ordered_json j;
        j["law"] = r.law;
        j["pass"] = r.pass;
        j["trials"] = r.trials_run;
        j["engaged"] = r.engaged;
        if (!r.pass) j["counterexample"] = r.counterexample;
        arr.push_back(std::move(j));
    }
    ordered_json top;
    top["pass"] = all;
    top["laws"] = std::move(arr);
    return top.dump(2) + "\n";
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["n"] = r.n;
        j["y"] = r.y;
        j["k"] = r.k;
        j["s_n"] = r.finite_activity.str_frac();
        j["limit_lower"] = r.limit.lower;
        j["limit_upper"] = r.limit.upper;
        if (r.limit.snapped) j["limit"] = r.limit.snapped->str_frac();
        j["deviation"] = r.deviation;
        j["interior_match"] = r.interior_match;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

ChipConfig read_heights_file(std::istream& is) {
    std::vector<std::int64_t> h;
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() || ptr != line.data() + line.size())
            throw InvalidParams("bad height line: '" + line + "'");
        h.push_back(v);
    }
    if (h.empty()) throw InvalidParams("heights file is empty");
    return ChipConfig(std::move(h));
}

Rat parse_decimal_or_fraction(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw InvalidParams("empty number");
    if (s.find('/') != std::string::npos) return Rat::parse(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(s));
    bool neg = s[0] == '-';
    std::string ip = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    std::string fp = s.substr(dot + 1);
    if (fp.empty() && ip.empty()) throw InvalidParams("bad number: " + raw);
    __int128 num = ip.empty() ? 0 : std::stoll(ip);
    __int128 den = 1;
    for (char ch : fp) {
        if (ch < '0' || ch > '9') throw InvalidParams("bad number: " + raw);
        num = num * 10 + (ch - '0');
        den *= 10;
        if (den > static_cast<__int128>(1) << 100) throw InvalidParams("too many digits: " + raw);
    }
    if (neg) num = -num;
    return Rat::make(num, den);
}

CdfSpec read_cdf_table(std::istream& is) {
    std::vector<std::pair<Rat, Rat>> pts;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto f = split(t, ',');
        if (f.size() != 2) throw InvalidCdf("bad table row: '" + line + "'");
        if (first && (trim(f[0]) == "x" || trim(f[0]) == "y")) {
            first = false;
            continue;  // optional header
        }
        first = false;
        try {
            pts.emplace_back(parse_decimal_or_fraction(f[0]), parse_decimal_or_fraction(f[1]));
        } catch (const InvalidParams& e) {
            throw InvalidCdf(e.what());
        }
    }
    return CdfSpec::from_table(std::move(pts));
}

}  // namespace chipfire::io
