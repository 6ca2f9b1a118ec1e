#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jcdimer/cli.hpp"
#include "jcdimer/serialization.hpp"

using namespace jcdimer;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

// Header -> value for a single-row report CSV.
std::map<std::string, std::string> report_fields(const std::string& text) {
  const auto rows = csv_rows(text);
  REQUIRE(rows.size() == 2);
  std::map<std::string, std::string> out;
  for (std::size_t k = 0; k < rows[0].size(); ++k) out[rows[0][k]] = rows[1][k];
  return out;
}

std::string scratch(const std::string& name) { return std::string(JCDIMER_SCRATCH_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2.0 * std::sqrt(2.0) - 2.0) == "0.828427124746");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(round_to_printed(1.0 - 1e-16) == 1.0);
  }

  TEST_CASE("ground: weak dipole coupling is phi1 dominated") {
    const auto r = run({"ground", "--delta", "0", "--j", "0.1", "--a", "0.1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["subspaces"]["p1"].get<double>() > 0.9);
    CHECK(doc["degenerate"].get<bool>() == false);
    CHECK(doc["model"] == "effective");
  }

  TEST_CASE("ground: decoupled cavities print p1 = 1") {
    const auto r = run({"ground", "--delta", "0", "--j", "0.1", "--a", "0", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto f = report_fields(r.out);
    CHECK(f.at("p1") == "1");
    CHECK(f.at("degenerate") == "false");
  }

  TEST_CASE("ground: large negative detuning is atomic") {
    const auto r = run({"ground", "--delta", "-10", "--j", "0.1", "--a", "0.1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(report_fields(r.out).at("p_atomic")) - 1.0) < 0.05);
  }

  TEST_CASE("ground: energies scale with g at fixed ratios") {
    auto energy = [](double s) {
      const auto r = run({"ground", "--delta", std::to_string(0.5 * s), "--j", std::to_string(0.3 * s), "--a",
                          std::to_string(0.1 * s), "--g", std::to_string(s), "--format", "csv"});
      REQUIRE(r.code == 0);
      return std::stod(report_fields(r.out).at("energy"));
    };
    const double e1 = energy(1.0);
    for (double s : {0.5, 2.0, 3.0}) CHECK(energy(s) == doctest::Approx(s * e1).epsilon(1e-10));
  }

  TEST_CASE("ground: full model") {
    const auto r = run({"ground", "--full-model", "--delta", "0", "--j", "1", "--a", "0.1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["model"] == "full");
    CHECK(doc["symmetric_weight"].get<double>() <= 1.0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"ground", "--no-such-flag"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"ground", "--g", "0"}).code == 2);
    CHECK(run({"ground", "--delta", "nan"}).code == 2);
    CHECK(run({"sweep", "--resolution", "1"}).code == 2);
    CHECK(run({"sweep", "--j-range", "3", "1"}).code == 2);
    CHECK(run({"ground", "--format", "xml"}).code == 2);
    CHECK(run({"ground", "--sf-eps", "-1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("unwritable output path exits with 1") {
    const auto r = run({"gaps", "--out", "/nonexistent-dir/gaps.csv"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open") != std::string::npos);
  }

  TEST_CASE("sweep: default grid CSV") {
    const auto r = run({"sweep"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6562);
    CHECK(r.out.substr(0, r.out.find('\n')) == kGridCsvHeader);

    std::set<std::string> labels;
    double ceiling = 0.0;
    double prev_delta = -1e9, prev_j = -1e9;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      REQUIRE(rows[k].size() == 6);
      const double d = std::stod(rows[k][0]), j = std::stod(rows[k][1]);
      // delta-major ascending, then J ascending
      CHECK((d > prev_delta || (d == prev_delta && j > prev_j)));
      prev_delta = d;
      prev_j = j;
      ceiling = std::max(ceiling, std::stod(rows[k][2]));
      labels.insert(rows[k][5]);
    }
    CHECK(std::abs(ceiling - 0.5) < 0.02);
    CHECK(labels == std::set<std::string>{"atomic-insulator", "polaritonic-insulator", "polaritonic-superfluid",
                                          "photonic-superfluid"});

    // 12 significant digits
    const auto& sample = rows[100][2];
    CHECK(sample == format_number(std::stod(sample)));
  }

  TEST_CASE("sweep: byte-identical reruns and CSV round trip") {
    const std::vector<std::string> args{"sweep", "--resolution", "21", "--threads", "3"};
    const auto a = run(args);
    const auto b = run({"sweep", "--resolution", "21"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    std::istringstream in(a.out);
    const auto grid = read_grid_csv(in);
    CHECK(grid.deltas.size() == 21);
    CHECK(grid.js.size() == 21);
    std::ostringstream again;
    write_grid_csv(again, grid);
    CHECK(again.str() == a.out);

    SweepSpec spec;
    spec.resolution = 21;
    const auto direct = sweep(spec);
    for (std::size_t c = 0; c < direct.cells.size(); ++c) {
      CHECK(grid.cells[c].var_N1 == round_to_printed(direct.cells[c].var_N1));
      CHECK(grid.cells[c].phase == direct.cells[c].phase);
    }
  }

  TEST_CASE("sweep: file output and boundary trace") {
    const auto grid_path = scratch("grid.csv");
    const auto boundary_path = scratch("boundary.csv");
    const auto r = run({"sweep", "--resolution", "41", "--out", grid_path, "--boundary", boundary_path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream g(grid_path);
    CHECK(read_grid_csv(g).cells.size() == 41 * 41);
    std::ifstream b(boundary_path);
    std::stringstream text;
    text << b.rdbuf();
    const auto rows = csv_rows(text.str());
    REQUIRE(rows.size() == 42);
    CHECK(rows[0] == std::vector<std::string>{"delta", "j_star"});
    CHECK(rows[1][1] == "nan");      // delta = -10: J range ends before the transition
    CHECK(rows.back()[1] == "nan");  // delta = +10: superfluid from J = 0
  }

  TEST_CASE("sweep: full J range flag and JSON output") {
    const auto r = run({"sweep", "--resolution", "5", "--full-j-range", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["cells"].size() == 25);
    CHECK(doc["cells"][0]["j"].get<double>() == -10.0);
  }

  TEST_CASE("gaps: resonance curve") {
    const auto r = run({"gaps"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 202);
    CHECK(rows[0] == std::vector<std::string>{"j", "de1", "de2", "de3", "de4"});
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][1] == "0.828427124746");
    CHECK(rows.back()[0] == "10");
    CHECK(std::stod(rows.back()[1]) < 0.01);
    for (std::size_t k = 1; k < rows.size(); ++k) {
      // printed at 12 significant digits, values up to ~10
      CHECK(std::abs(std::stod(rows[k][2]) - std::stod(rows[k][3]) - std::stod(rows[k][0])) < 5e-11);
      if (k > 1) CHECK(std::stod(rows[k][1]) <= std::stod(rows[k - 1][1]));
    }
    // The in-memory rows that cmd_gaps serializes satisfy the identity to 1e-12.
    for (const auto& row : gap_curve(0.0, 10.0, 201, ModelParams::from_detuning(0.0, 0.0, 0.1)))
      CHECK(std::abs(row.gaps.dE2 - row.gaps.dE3 - row.J) < 1e-12);
  }

  TEST_CASE("validate: default battery passes, corrupted Hamiltonian fails") {
    const auto ok = run({"validate"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("points=21") != std::string::npos);

    const auto bad = run({"validate", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL truncated-isometry exactness  max_error=1e-06") != std::string::npos);

    const auto other_seed = run({"validate", "--seed", "99", "--draws", "20", "--a", "0.2"});
    CHECK(other_seed.code == 0);
  }

  TEST_CASE("config file precedence") {
    const auto path = scratch("run.cfg");
    {
      std::ofstream cfg(path);
      cfg << "# photonic superfluid point\ndelta = 10\nj = 1\na = 0.1\nformat = csv\n";
    }
    const auto from_file = report_fields(run({"ground", "--config", path}).out);
    const auto from_flags =
        report_fields(run({"ground", "--delta", "10", "--j", "1", "--a", "0.1", "--format", "csv"}).out);
    CHECK(from_file == from_flags);

    const auto overridden = report_fields(run({"ground", "--config", path, "--delta", "-10"}).out);
    const auto expected =
        report_fields(run({"ground", "--delta", "-10", "--j", "1", "--a", "0.1", "--format", "csv"}).out);
    CHECK(overridden == expected);

    {
      std::ofstream cfg(path);
      cfg << "detuning = 3\n";
    }
    CHECK(run({"ground", "--config", path}).code == 2);
  }
}
