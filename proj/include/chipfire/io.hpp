#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chipfire/config.hpp"
#include "chipfire/laws.hpp"
#include "chipfire/simulate.hpp"
#include "chipfire/staircase.hpp"

namespace chipfire::io {

// CSV schema: k,activity_num,activity_den,period,transient (exact integers).
void write_diagram_csv(std::ostream& os, const PhaseDiagram& d);
PhaseDiagram read_diagram_csv(std::istream& is);

// CSV schema: y,rot_lower,rot_upper,snapped_num,snapped_den
// (snapped columns empty when uncertified).
void write_staircase_csv(std::ostream& os, const std::vector<StaircasePoint>& pts);

// JSON emission (deterministic field order).
std::string summary_json(const ChipConfig& c, std::int64_t k, const SimulationSummary& s,
                         bool include_trace);
std::string diagram_json(const PhaseDiagram& d);
std::string stair_json(double a, double b, double tol);
std::string law_reports_json(const std::vector<LawReport>& reports);
std::string convergence_json(const std::vector<ConvergenceRow>& rows);

// One nonnegative integer per line; n inferred from line count.
ChipConfig read_heights_file(std::istream& is);

// CSV rows x,F with required endpoints (0,0) and (1,1); decimals parsed
// exactly.  Throws InvalidCdf on malformed input.
CdfSpec read_cdf_table(std::istream& is);

Rat parse_decimal_or_fraction(const std::string& s);

}  // namespace chipfire::io
