#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectral/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"spectral"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(store.size());
  for (const std::string& s : store) argv.push_back(s.c_str());
  return spectral::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string tmp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("spectral_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

struct TempFile {
  explicit TempFile(const std::string& name) : path(tmp_path(name)) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
  std::string path;
};

}  // namespace

TEST_CASE("sample emits the deterministic beta=inf Hermite matrix") {
  TempFile out("binf.csv");
  REQUIRE(run_cli({"sample", "--family", "hermite", "--beta", "inf", "--n", "4",
                   "--out", out.path}) == 0);
  const auto lines = csv_lines(slurp(out.path));
  REQUIRE(lines.size() == 6);  // config line + header + 4 rows
  CHECK(lines[0].find("# subcommand=sample family=hermite beta=inf n=4") == 0);
  CHECK(lines[1] == "i,diag,offdiag");
  for (int i = 0; i < 4; ++i) {
    const auto cells = split(lines[static_cast<std::size_t>(2 + i)], ',');
    REQUIRE(cells.size() == 3);
    CHECK(std::stod(cells[1]) == 0.0);
    if (i < 3) {
      const double off = std::stod(cells[2]);
      CHECK(off * off == doctest::Approx((3.0 - i) / 16.0).epsilon(1e-12));
    } else {
      CHECK(cells[2].empty());
    }
  }
}

TEST_CASE("sample output is reproducible under the seed") {
  TempFile a("rep_a.csv"), b("rep_b.csv"), c("rep_c.csv");
  REQUIRE(run_cli({"sample", "--n", "20", "--seed", "42", "--out", a.path}) == 0);
  REQUIRE(run_cli({"sample", "--n", "20", "--seed", "42", "--out", b.path}) == 0);
  REQUIRE(run_cli({"sample", "--n", "20", "--seed", "43", "--out", c.path}) == 0);
  CHECK(slurp(a.path) == slurp(b.path));
  CHECK(slurp(a.path) != slurp(c.path));
}

TEST_CASE("laguerre sample echoes the resolved shape parameters") {
  TempFile out("lag.json");
  REQUIRE(run_cli({"sample", "--family", "laguerre", "--beta", "2", "--n", "10",
                   "--gamma", "0.25", "--format", "json", "--out", out.path}) == 0);
  const json doc = load_json(out.path);
  CHECK(doc["config"]["gamma"] == doctest::Approx(0.25));
  // a = n beta / (2 gamma)
  CHECK(doc["config"]["a"] == doctest::Approx(10.0 * 2.0 / 0.5));
  CHECK(doc["columns"] == json({"i", "diag", "subdiag"}));
  REQUIRE(doc["rows"].size() == 10);
  for (const auto& row : doc["rows"]) CHECK(row[1].get<double>() > 0.0);
}

TEST_CASE("histogram counts every eigenvalue with a wide single bin") {
  TempFile out("hist1.csv");
  REQUIRE(run_cli({"histogram", "--n", "50", "--beta", "2", "--bins", "1", "--lo", "-2",
                   "--hi", "2", "--seed", "5", "--out", out.path}) == 0);
  const auto lines = csv_lines(slurp(out.path));
  REQUIRE(lines.size() == 3);
  const auto cells = split(lines[2], ',');
  REQUIRE(cells.size() == 5);
  CHECK(cells[3] == "50");
  // density = count / (n * width)
  CHECK(std::stod(cells[4]) == doctest::Approx(50.0 / (50.0 * 4.0)).epsilon(1e-12));
}

TEST_CASE("histogram defaults cover the limiting support") {
  TempFile out("hist2.json");
  REQUIRE(run_cli({"histogram", "--family", "laguerre", "--n", "300", "--beta", "1",
                   "--gamma", "0.5", "--format", "json", "--seed", "6", "--out",
                   out.path}) == 0);
  const json doc = load_json(out.path);
  REQUIRE(doc["rows"].size() == 25);
  std::size_t total = 0;
  for (const auto& row : doc["rows"]) total += row[3].get<std::size_t>();
  CHECK(total <= 300);
  CHECK(total > 250);  // most of the spectrum lies inside the MP support
  CHECK(doc["config"]["lo"].get<double>() == doctest::Approx(std::pow(1 - std::sqrt(0.5), 2)));
}

TEST_CASE("deviation sweep echoes the arcsine theory value") {
  TempFile out("dev.csv");
  REQUIRE(run_cli({"deviation", "--n-start", "1000", "--count", "3", "--out", out.path}) ==
          0);
  const auto lines = csv_lines(slurp(out.path));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].find("theoretical=0.11553") != std::string::npos);
  CHECK(lines[1] == "n,deviation");
  CHECK(split(lines[2], ',')[0] == "1000");
  CHECK(split(lines[4], ',')[0] == "1002");
}

TEST_CASE("strict deviation gate") {
  TempFile out("devstrict.csv");
  CHECK(run_cli({"deviation", "--n-start", "500", "--count", "2", "--band", "10",
                 "--strict", "--out", out.path}) == 0);
  CHECK(run_cli({"deviation", "--n-start", "500", "--count", "2", "--band", "1e-12",
                 "--strict", "--out", out.path}) == 3);
}

TEST_CASE("fluctuate reports means, covariances and z-scores") {
  TempFile out("fluct.json");
  REQUIRE(run_cli({"fluctuate", "--n", "32", "--beta", "2", "--kmax", "2", "--trials",
                   "400", "--seed", "9", "--format", "json", "--strict", "--zmax", "1e9",
                   "--out", out.path}) == 0);
  const json doc = load_json(out.path);
  CHECK(doc["config"]["trials"] == 400);
  REQUIRE(doc["rows"].size() == 2 + 3);  // kmax mean rows + upper-triangle cov rows
  int mean_rows = 0, cov_rows = 0;
  for (const auto& row : doc["rows"]) {
    if (row[0] == "mean") ++mean_rows;
    if (row[0] == "cov") ++cov_rows;
    CHECK(row.size() == 7);
  }
  CHECK(mean_rows == 2);
  CHECK(cov_rows == 3);
  CHECK(doc["config"]["max_abs_z"].is_number());
}

TEST_CASE("fluctuate gaussianity rows and the Laguerre twin targets") {
  TempFile out("fluctlag.json");
  REQUIRE(run_cli({"fluctuate", "--family", "laguerre", "--n", "24", "--beta", "1",
                   "--gamma", "0.5", "--kmax", "2", "--trials", "300", "--seed", "10",
                   "--gaussianity", "--format", "json", "--out", out.path}) == 0);
  const json doc = load_json(out.path);
  bool saw_wick = false, saw_skew = false;
  for (const auto& row : doc["rows"]) {
    if (row[0] == "wick") saw_wick = true;
    if (row[0] == "skewness") saw_skew = true;
  }
  CHECK(saw_wick);
  CHECK(saw_skew);
  // summary carries both the exact and the as-printed (1,1) comparison
  bool saw_twin = false;
  for (const auto& line : doc["summary"])
    if (line.get<std::string>().find("as-printed target") != std::string::npos)
      saw_twin = true;
  CHECK(saw_twin);
}

TEST_CASE("theory tables expose both Laguerre covariance variants") {
  TempFile out("theory.json");
  REQUIRE(run_cli({"theory", "--kmax", "3", "--gamma", "0.5", "--format", "json", "--out",
                   out.path}) == 0);
  const json doc = load_json(out.path);
  double dev2 = 0.0, model11 = -1.0, printed11 = -1.0, mp1 = 0.0;
  for (const auto& row : doc["rows"]) {
    const std::string table = row[0].get<std::string>();
    if (table == "dev_hermite" && row[1] == 2) dev2 = row[3].get<double>();
    if (table == "moment_mp" && row[1] == 1) mp1 = row[3].get<double>();
    if (table == "cov_laguerre_model" && row[1] == 1 && row[2] == 1)
      model11 = row[3].get<double>();
    if (table == "cov_laguerre_printed" && row[1] == 1 && row[2] == 1)
      printed11 = row[3].get<double>();
  }
  CHECK(dev2 == 0.25);
  CHECK(mp1 == 1.0);
  CHECK(model11 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(printed11 == doctest::Approx(0.5 + 0.125).epsilon(1e-12));
}

TEST_CASE("paths table lists descent classes") {
  TempFile out("paths.json");
  REQUIRE(run_cli({"paths", "--k", "4", "--format", "json", "--out", out.path}) == 0);
  const json doc = load_json(out.path);
  REQUIRE(doc["rows"].size() == 6);  // (r,i) = (0,0) (1,0) (1,1) (2,0) (2,1) (2,2)
  long long total = 0;
  for (const auto& row : doc["rows"])
    if (row[2] == 0) total += row[4].get<long long>();  // one family_size per class
  CHECK(total == 19);  // central trinomial number
  for (const auto& row : doc["rows"])
    if (row[1] == 1 && row[2] == 1) CHECK(row[3] == 6);
}

TEST_CASE("bad invocations exit with the validation code") {
  CHECK(run_cli({"nonsense"}) == 2);
  CHECK(run_cli({"sample"}) == 2);                                   // --n is required
  CHECK(run_cli({"sample", "--n", "4", "--beta", "abc"}) == 2);      // unparseable beta
  CHECK(run_cli({"sample", "--n", "4", "--format", "yaml"}) == 2);   // unknown format
  CHECK(run_cli({"sample", "--family", "laguerre", "--n", "4", "--gamma", "1.5"}) == 2);
  CHECK(run_cli({"sample", "--n", "4", "--beta", "inf", "--unscaled"}) == 2);
  CHECK(run_cli({"fluctuate", "--n", "8", "--beta", "inf"}) == 2);
  CHECK(run_cli({"histogram", "--n", "8", "--bins", "0"}) == 2);
  CHECK(run_cli({"paths", "--k", "13"}) == 2);  // beyond the enumeration limit
}

TEST_CASE("unwritable output path reports an I/O failure") {
  CHECK(run_cli({"sample", "--n", "4", "--out", "/nonexistent_dir/x.csv"}) == 1);
}
