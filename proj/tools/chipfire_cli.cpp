// chipfire: exact parallel chip-firing on the complete graph K_n.
// Subcommands: simulate, phase-diagram, staircase, stair, verify.
// Exit codes: 0 ok, 1 input error, 2 step budget exceeded, 3 degenerate stair.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "chipfire/io.hpp"
#include "chipfire/laws.hpp"
#include "chipfire/rotation.hpp"
#include "chipfire/simulate.hpp"
#include "chipfire/staircase.hpp"

namespace {

using namespace chipfire;

void apply_threads(int threads) {
#ifdef _OPENMP
    if (const char* env = std::getenv("CHIPFIRE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) {
            omp_set_num_threads(t);
            return;
        }
    }
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw InvalidParams("cannot open output file '" + out_path + "'");
    os << text;
}

CdfSpec cdf_from_flags(const std::string& cdf, const std::string& table_path) {
    if (cdf == "table") {
        if (table_path.empty()) throw InvalidParams("--cdf table needs --table FILE");
        std::ifstream is(table_path);
        if (!is) throw InvalidParams("cannot open table file '" + table_path + "'");
        return io::read_cdf_table(is);
    }
    return CdfSpec::by_name(cdf);
}

int run(int argc, char** argv) {
    CLI::App app{"exact parallel chip-firing on K_n: simulations, phase diagrams, "
                 "rotation-number staircases, law suites"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all; CHIPFIRE_THREADS overrides)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one configuration to its cycle");
    std::string family = "slope2", heights_file, out_path;
    std::int64_t n = 10, add_k = 0;
    std::uint64_t budget = 0;
    bool trace = false;
    sim->add_option("--family", family, "config family (slope2, constant:<h>)");
    sim->add_option("--n", n, "vertex count");
    sim->add_option("--add-k", add_k, "chips added at every vertex");
    sim->add_option("--heights-file", heights_file, "one height per line, n = line count");
    sim->add_option("--budget", budget, "step budget (0 = 64*n^2)");
    sim->add_flag("--trace", trace, "include the alpha trace");
    sim->add_option("--out", out_path, "output path (default stdout)");

    // phase-diagram
    auto* pd = app.add_subcommand("phase-diagram", "activity phase diagram for k = 0..n");
    std::string pd_family = "slope2", pd_out, pd_format = "csv";
    std::int64_t pd_n = 100;
    std::uint64_t pd_budget = 0;
    pd->add_option("--family", pd_family, "config family");
    pd->add_option("--n", pd_n, "vertex count")->required();
    pd->add_option("--budget", pd_budget, "per-row step budget (0 = 64*n^2)");
    pd->add_option("--out", pd_out, "output path (default stdout)");
    pd->add_option("--format", pd_format, "csv|json");

    // staircase
    auto* sc = app.add_subcommand("staircase", "sample the limiting staircase s(y)");
    std::string sc_cdf = "slope2", sc_table, sc_out;
    std::int64_t sc_grid = 512, sc_qmax = 64, sc_poly = 1 << 14;
    std::uint64_t sc_tmax = 1 << 13;
    sc->add_option("--cdf", sc_cdf, "slope2|sqrt|sine|table");
    sc->add_option("--table", sc_table, "table file for --cdf table");
    sc->add_option("--grid", sc_grid, "samples at y = i/grid, i = 0..grid");
    sc->add_option("--q-max", sc_qmax, "largest snap denominator");
    sc->add_option("--t-max", sc_tmax, "orbit length for rotation brackets");
    sc->add_option("--poly-grid", sc_poly, "polygonalization grid for sqrt/sine");
    sc->add_option("--out", sc_out, "output path (default stdout)");

    // stair
    auto* st = app.add_subcommand("stair", "endpoints of the stair s^{-1}(p/q)");
    std::string st_cdf = "slope2", st_table, st_out;
    std::int64_t st_p = 1, st_q = 2, st_poly = 1 << 14;
    double st_tol = 1e-4;
    st->add_option("--cdf", st_cdf, "slope2|sqrt|sine|table");
    st->add_option("--table", st_table, "table file for --cdf table");
    st->add_option("--p", st_p, "numerator")->required();
    st->add_option("--q", st_q, "denominator")->required();
    st->add_option("--tol", st_tol, "endpoint tolerance");
    st->add_option("--poly-grid", st_poly, "polygonalization grid for sqrt/sine");
    st->add_option("--out", st_out, "output path (default stdout)");

    // verify
    auto* vf = app.add_subcommand("verify", "run law suites");
    std::string vf_suite = "all", vf_out;
    std::int64_t vf_nmax = 64;
    std::uint64_t vf_trials = 200, vf_seed = 1;
    vf->add_option("--suite", vf_suite, "law id or 'all'");
    vf->add_option("--n-max", vf_nmax, "largest vertex count sampled");
    vf->add_option("--trials", vf_trials, "trials per law");
    vf->add_option("--seed", vf_seed, "seed for the deterministic sampler");
    vf->add_option("--out", vf_out, "output path (default stdout)");

    auto* laws_cmd = app.add_subcommand("laws", "list known law ids");

    CLI11_PARSE(app, argc, argv);
    apply_threads(threads);

    if (sim->parsed()) {
        ChipConfig base = [&] {
            if (!heights_file.empty()) {
                std::ifstream is(heights_file);
                if (!is) throw InvalidParams("cannot open heights file '" + heights_file + "'");
                return io::read_heights_file(is);
            }
            return FamilySpec::by_name(family).base_config(n);
        }();
        ChipConfig cfg = add_k ? base.add(add_k) : base;
        SimulateOptions opt;
        opt.max_steps = budget;
        opt.record_trace = trace;
        SimulationSummary s = simulate_to_cycle(cfg, opt);
        emit(out_path, io::summary_json(cfg, add_k, s, trace));
        return 0;
    }

    if (pd->parsed()) {
        PhaseDiagram d = phase_diagram(FamilySpec::by_name(pd_family), pd_n, pd_budget);
        if (pd_format == "json") {
            emit(pd_out, io::diagram_json(d));
        } else if (pd_format == "csv") {
            std::ostringstream os;
            io::write_diagram_csv(os, d);
            emit(pd_out, os.str());
        } else {
            throw InvalidParams("unknown format '" + pd_format + "'");
        }
        return 0;
    }

    if (sc->parsed()) {
        CdfSpec F = cdf_from_flags(sc_cdf, sc_table);
        auto pts = limit_staircase(F, sc_grid, sc_qmax, sc_tmax, sc_poly);
        std::ostringstream os;
        io::write_staircase_csv(os, pts);
        emit(sc_out, os.str());
        return 0;
    }

    if (st->parsed()) {
        CdfSpec F = cdf_from_flags(st_cdf, st_table);
        StairInterval iv = stair_interval(F, st_p, st_q, st_tol, st_poly);
        emit(st_out, io::stair_json(iv.a, iv.b, st_tol));
        return 0;
    }

    if (vf->parsed()) {
        LawParams params;
        params.n_max = vf_nmax;
        params.trials = vf_trials;
        params.seed = vf_seed;
        std::vector<LawReport> reports;
        if (vf_suite == "all") {
            for (const auto& id : law_ids()) reports.push_back(check_law(id, params));
        } else {
            reports.push_back(check_law(vf_suite, params));
        }
        emit(vf_out, io::law_reports_json(reports));
        bool all = true;
        for (const auto& r : reports) all = all && r.pass;
        return all ? 0 : 4;
    }

    if (laws_cmd->parsed()) {
        std::string listing;
        for (const auto& id : law_ids()) listing += id + "\n";
        emit("", listing);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chipfire::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chipfire::DegenerateStair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
