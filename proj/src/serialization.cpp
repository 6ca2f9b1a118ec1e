#include "jcdimer/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jcdimer/errors.hpp"

namespace jcdimer {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  // Avoid "-0" in outputs that are compared byte-for-byte.
  if (std::string_view(buf) == "-0") return "0";
  return buf;
}

double round_to_printed(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_number(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ContractViolation("malformed number '" + text + "' in CSV");
  return v;
}

nlohmann::ordered_json rounded(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_to_printed(x);
}

}  // namespace

void write_grid_csv(std::ostream& os, const PhaseGrid& grid) {
  os << kGridCsvHeader << '\n';
  for (const auto& c : grid.cells)
    os << format_number(c.delta) << ',' << format_number(c.J) << ',' << format_number(c.var_N1) << ','
       << format_number(c.var_NA1) << ',' << format_number(c.product) << ',' << to_string(c.phase) << '\n';
}

PhaseGrid read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kGridCsvHeader) throw ContractViolation("grid CSV: bad header");
  PhaseGrid grid;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw ContractViolation("grid CSV: expected 6 fields in '" + line + "'");
    PhaseCell c;
    c.delta = parse_number(f[0]);
    c.J = parse_number(f[1]);
    c.var_N1 = parse_number(f[2]);
    c.var_NA1 = parse_number(f[3]);
    c.product = parse_number(f[4]);
    c.phase = phase_label_from_string(f[5]);
    grid.cells.push_back(c);
  }
  // Rows are delta-major, so the J axis is the run of cells sharing the first delta.
  for (const auto& c : grid.cells) {
    if (c.delta != grid.cells.front().delta) break;
    grid.js.push_back(c.J);
  }
  if (grid.js.empty() || grid.cells.size() % grid.js.size() != 0)
    throw ContractViolation("grid CSV: cell count is not a multiple of the J axis length");
  for (std::size_t i = 0; i < grid.cells.size(); i += grid.js.size()) grid.deltas.push_back(grid.cells[i].delta);
  return grid;
}

void write_grid_json(std::ostream& os, const PhaseGrid& grid) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& c : grid.cells)
    cells.push_back({{"delta", rounded(c.delta)},
                     {"j", rounded(c.J)},
                     {"var_n1", rounded(c.var_N1)},
                     {"var_na1", rounded(c.var_NA1)},
                     {"product", rounded(c.product)},
                     {"phase", std::string(to_string(c.phase))}});
  nlohmann::ordered_json doc{{"resolution", grid.deltas.size()}, {"cells", std::move(cells)}};
  os << doc.dump(2) << '\n';
}

void write_gaps_csv(std::ostream& os, const std::vector<GapRow>& rows) {
  os << kGapCsvHeader << '\n';
  for (const auto& r : rows)
    os << format_number(r.J) << ',' << format_number(r.gaps.dE1) << ',' << format_number(r.gaps.dE2) << ','
       << format_number(r.gaps.dE3) << ',' << format_number(r.gaps.dE4) << '\n';
}

void write_gaps_json(std::ostream& os, const std::vector<GapRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    doc.push_back({{"j", rounded(r.J)},
                   {"de1", rounded(r.gaps.dE1)},
                   {"de2", rounded(r.gaps.dE2)},
                   {"de3", rounded(r.gaps.dE3)},
                   {"de4", rounded(r.gaps.dE4)}});
  os << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& os, const GroundStateReport& r) {
  os << kReportCsvHeader << '\n' << format_number(r.energy);
  for (int k = 0; k < 5; ++k) os << ',' << (r.subspaces ? format_number(r.subspaces->p[k]) : "nan");
  os << ',' << format_number(r.character.photonic) << ',' << format_number(r.character.atomic) << ','
     << format_number(r.character.mixed) << ',' << format_number(r.order.var_N1) << ','
     << format_number(r.order.var_NA1) << ',' << format_number(r.order.product) << ','
     << (r.degenerate ? "true" : "false") << '\n';
}

void write_report_json(std::ostream& os, const GroundStateReport& r) {
  nlohmann::ordered_json doc;
  doc["model"] = r.model == ModelKind::effective ? "effective" : "full";
  doc["params"] = {{"delta", rounded(r.params.delta())},
                   {"j", rounded(r.params.J)},
                   {"a", rounded(r.params.A)},
                   {"g", rounded(r.params.g)},
                   {"omega_c", rounded(r.params.omega_c)},
                   {"n", r.params.n_excitations}};
  doc["energy"] = rounded(r.energy);
  doc["gap"] = rounded(r.gap);
  doc["degenerate"] = r.degenerate;
  if (r.subspaces) {
    nlohmann::ordered_json p;
    for (int k = 0; k < 5; ++k) p["p" + std::to_string(k + 1)] = rounded(r.subspaces->p[k]);
    doc["subspaces"] = std::move(p);
  } else {
    doc["subspaces"] = nullptr;
  }
  if (r.model == ModelKind::full) doc["symmetric_weight"] = rounded(r.symmetric_weight);
  doc["character"] = {{"photonic", rounded(r.character.photonic)},
                      {"atomic", rounded(r.character.atomic)},
                      {"mixed", rounded(r.character.mixed)}};
  doc["order"] = {{"var_n1", rounded(r.order.var_N1)},
                  {"var_na1", rounded(r.order.var_NA1)},
                  {"product", rounded(r.order.product)}};
  os << doc.dump(2) << '\n';
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& trace) {
  os << kBoundaryCsvHeader << '\n';
  for (const auto& b : trace) os << format_number(b.delta) << ',' << (b.j_star ? format_number(*b.j_star) : "nan") << '\n';
}

}  // namespace jcdimer
