#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "fracspec/fracspec.hpp"
#include "golden.hpp"

using namespace fracspec;
using fracspec::testing::data_dir;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spectrum(const std::string& name) { return (data_dir() / "spectra" / name).string(); }
std::string path_file(const std::string& name) { return (data_dir() / "paths" / name).string(); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("theta by eigenvalue") {
    const auto r = run({"theta", "--n", "5", "--k", "1", "--gamma", "1", "--m", "0", "--lambda", "0"});
    CHECK(r.code == 0);
    CHECK(r.err.find("extended") != std::string::npos);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][2] == format_double(q_gamma_trivial(SpectralParams(5, 1, 1.0, GammaPolicy::allow_integer))));

    const auto j = run({"theta", "--n", "4", "--k", "1", "--gamma", "0.5", "--m", "0", "--lambda", "0", "--format",
                        "json"});
    CHECK(j.code == 0);
    const auto doc = json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["theta"].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(doc["params"]["extended"] == false);
  }

  TEST_CASE("theta by symbol arguments") {
    const auto r = run({"--n", "5", "--gamma", "0.6", "theta", "--a", "2", "--b", "1", "--format", "json"});
    CHECK(r.code == 0);
    const double want = theta({2.0, SymbolB::real(1.0)}, SpectralParams(5, 1, 0.6));
    CHECK(json::parse(r.out)["theta"].get<double>() == round_significant(want));
    const auto beta = run({"theta", "--n", "6", "--gamma", "0.9", "--a", "1.5", "--beta", "0.3"});
    CHECK(beta.code == 0);
    CHECK(csv_rows(beta.out)[0][1] == "beta");
    CHECK(run({"theta", "--n", "5", "--gamma", "0.6", "--a", "2"}).code == 2);
    CHECK(run({"theta", "--n", "5", "--gamma", "0.6", "--a", "2", "--b", "1", "--beta", "0.2"}).code == 2);
    CHECK(run({"theta", "--n", "5", "--gamma", "0.6", "--m", "0"}).code == 2);
    CHECK(run({"theta", "--n", "5", "--gamma", "0.6", "--a", "0.5", "--b", "1"}).code == 2);
    CHECK(run({"theta", "--gamma", "0.6", "--m", "0", "--lambda", "1"}).code == 2);
  }

  TEST_CASE("theta grid matches per-cell calls") {
    const auto r = run({"theta", "--grid", "3", "5", "--spectrum", spectrum("morse_10.csv")});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    const auto file = read_spectrum_file(spectrum("morse_10.csv"));
    const SpectralParams p(4, 1, 0.5);
    for (int m = 0; m <= 3; ++m) {
      REQUIRE(rows[m + 1].size() == 7);
      for (int l = 0; l <= 5; ++l) {
        CHECK(rows[m + 1][l + 1] == format_double(theta_eigenvalue(m, file.spectrum[l], p)));
      }
    }
    CHECK(run({"theta", "--grid", "3", "500", "--spectrum", spectrum("morse_10.csv")}).code == 2);
    CHECK(run({"theta", "--grid", "3", "5"}).code == 2);
    CHECK(run({"theta", "--grid", "3", "--spectrum", spectrum("morse_10.csv")}).code == 2);
  }

  TEST_CASE("cn") {
    const auto r = run({"cn", "--n-min", "4", "--n-max", "8"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"n", "c_n", "residual", "gap_to_asymptote"});
    const double published[] = {0.857, 1.408, 1.932, 2.446, 2.955};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(std::stod(rows[i + 1][1]) - published[i]) < 0.005);

    const auto tight = run({"cn", "--n-min", "4", "--n-max", "4", "--tol", "1e-14", "--format", "json"});
    CHECK(tight.code == 0);
    const auto doc = json::parse(tight.out);
    CHECK(doc["cn"].size() == 1);
    CHECK(doc["cn"][0]["residual"].get<double>() <= 1e-12);

    const auto pretty = run({"cn", "--n-min", "5", "--format", "pretty"});
    CHECK(pretty.out.find("1.408447") != std::string::npos);

    const auto bad = run({"cn", "--n-min", "3"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"cn"}).code == 2);
  }

  TEST_CASE("morse") {
    const auto large = run({"morse", "--spectrum", spectrum("all_large.csv")});
    CHECK(large.code == 0);
    const auto doc = json::parse(large.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["index"] == 0);
    CHECK(doc["nullity"] == 0);
    CHECK(doc["complete"] == true);

    const auto pinched = run({"morse", "--spectrum", spectrum("pinched3.csv")});
    CHECK(pinched.code == 0);
    const auto pd = json::parse(pinched.out);
    CHECK(pd["index"] == 3);
    CHECK(pd["contributing_pairs"].size() == 3);
    for (const auto& pair : pd["contributing_pairs"]) CHECK(pair["m"] == 0);

    CHECK(run({"morse", "--spectrum", spectrum("bad_lambda0.csv"), "--n", "5", "--gamma", "0.6"}).code == 2);
    CHECK(run({"morse", "--spectrum", spectrum("missing.csv"), "--n", "5", "--gamma", "0.6"}).code == 2);
    CHECK(run({"morse", "--spectrum", spectrum("all_large.csv"), "--k", "2"}).code == 2);
  }

  TEST_CASE("morse warns on an incomplete certificate") {
    const auto tmp = std::filesystem::temp_directory_path() / "fracspec_cli_short.csv";
    std::ofstream(tmp) << "# n: 5\n# gamma: 1\nlambda\n0\n0.3\n0.6\n";
    const auto r = run({"morse", "--spectrum", tmp.string(), "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.err.find("truncation certificate") != std::string::npos);
    CHECK(csv_rows(r.out)[1][4] == "false");
    std::filesystem::remove(tmp);
  }

  TEST_CASE("bifurcate") {
    const auto constant = run({"bifurcate", "--path", path_file("constant.csv")});
    CHECK(constant.code == 0);
    const auto cd = json::parse(constant.out);
    CHECK(cd["instants"].empty());
    CHECK(cd["jump_total"] == 0);

    const auto plot = std::filesystem::temp_directory_path() / "fracspec_cli_plot.csv";
    const auto one = run({"bifurcate", "--path", path_file("one_crossing.csv"), "--plot-data", plot.string(),
                          "--plot-samples", "64"});
    CHECK(one.code == 0);
    const auto od = json::parse(one.out);
    REQUIRE(od["instants"].size() == 1);
    CHECK(od["instants"][0]["t"].get<double>() == doctest::Approx(1.0 / 1.7).epsilon(1e-9));
    std::ifstream in(plot);
    std::stringstream text;
    text << in.rdbuf();
    const auto rows = csv_rows(text.str());
    REQUIRE(rows.size() == 66);
    CHECK(rows[0] == std::vector<std::string>{"t", "theta_1", "theta_2", "threshold"});
    int crossings = 0;
    for (std::size_t i = 2; i < rows.size(); ++i) {
      const bool above_prev = std::stod(rows[i - 1][1]) > std::stod(rows[i - 1][3]);
      const bool above = std::stod(rows[i][1]) > std::stod(rows[i][3]);
      crossings += above != above_prev;
    }
    CHECK(crossings == 1);
    std::filesystem::remove(plot);

    const auto three = run({"bifurcate", "--path", path_file("three_track.csv"), "--resolution", "2048"});
    CHECK(three.code == 0);
    const auto td = json::parse(three.out);
    CHECK(td["jump_total"].get<int>() == td["index_end"].get<int>() - td["index_start"].get<int>());

    const auto degenerate = run({"bifurcate", "--path", path_file("degenerate_endpoint.csv")});
    CHECK(degenerate.code == 2);
    CHECK(degenerate.err.find("degenerate") != std::string::npos);

    // Flags override file metadata: gamma 0.6 moves the threshold away from lambda = 1.
    CHECK(run({"bifurcate", "--path", path_file("degenerate_endpoint.csv"), "--gamma", "0.6"}).code == 0);
  }

  TEST_CASE("regime") {
    const auto r = run({"regime", "--n-range", "3:8", "--gamma-steps", "40"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 1 + 6 * 40);
    CHECK(rows[0].size() == 9);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const int n = std::stoi(rows[i][0]);
      const double g = std::stod(rows[i][1]);
      const bool in_regime = rows[i][3] == "true";
      CHECK(in_regime == (1 < 0.5 * n - g));
      if (n == 3 && in_regime) CHECK(rows[i][8] == "false");
      if (!in_regime) CHECK(rows[i][8].empty());
    }
    // The inequality flips within one gamma step of c_n.
    for (int n = 4; n <= 8; ++n) {
      const double cn = thresholds::solve_cn(n).c_n;
      const double step = 0.5 * n / 41;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (std::stoi(rows[i][0]) != n || rows[i][8].empty()) continue;
        const double g = std::stod(rows[i][1]);
        if (std::abs(g - cn) > step) CHECK((rows[i][8] == "true") == (g < cn));
      }
    }
    const auto json_out = run({"regime", "--n-range", "5", "--gamma-steps", "3", "--format", "json"});
    CHECK(json_out.code == 0);
    CHECK(json::parse(json_out.out)["rows"].size() == 3);
    CHECK(run({"regime", "--n-range", "2:4"}).code == 2);
    CHECK(run({"regime", "--n-range", "x"}).code == 2);
    CHECK(run({"regime", "--n-range", "4", "--gamma-steps", "0"}).code == 2);
  }

  TEST_CASE("regime marks poles and out-of-regime rows") {
    const auto r = run({"regime", "--n-range", "5", "--gamma-steps", "4", "--k", "1"});
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[3][1] == "1.5");
    CHECK(rows[3][5].empty());
    CHECK(rows[2][4] == "true");
  }

  TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"cn", "--n-min", "four"}).code == 2);
    CHECK(run({"cn", "--n-min", "4", "--format", "xml"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("bifurcate") != std::string::npos);
  }
}
