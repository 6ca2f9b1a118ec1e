#pragma once

// CSV and JSON writers for reports, gap curves and phase grids. All numbers are
// printed with 12 significant digits so output is byte-stable on one platform.

#include <iosfwd>
#include <string>
#include <vector>

#include "jcdimer/analytics.hpp"
#include "jcdimer/observables.hpp"
#include "jcdimer/phase_sweep.hpp"

namespace jcdimer {

std::string format_number(double x);
// The value that format_number(x) prints, as a double.
double round_to_printed(double x);

inline constexpr const char* kGridCsvHeader = "delta,j,var_n1,var_na1,product,phase";
inline constexpr const char* kGapCsvHeader = "j,de1,de2,de3,de4";
inline constexpr const char* kReportCsvHeader =
    "energy,p1,p2,p3,p4,p5,p_photonic,p_atomic,p_mixed,var_n1,var_na1,product,degenerate";
inline constexpr const char* kBoundaryCsvHeader = "delta,j_star";

void write_grid_csv(std::ostream& os, const PhaseGrid& grid);
// Parses what write_grid_csv emits. Throws ContractViolation on malformed input.
PhaseGrid read_grid_csv(std::istream& is);
void write_grid_json(std::ostream& os, const PhaseGrid& grid);

void write_gaps_csv(std::ostream& os, const std::vector<GapRow>& rows);
void write_gaps_json(std::ostream& os, const std::vector<GapRow>& rows);

void write_report_csv(std::ostream& os, const GroundStateReport& report);
void write_report_json(std::ostream& os, const GroundStateReport& report);

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& trace);

}  // namespace jcdimer
