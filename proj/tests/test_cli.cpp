#include "cybord/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cybord::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::string kSample = std::string(CYBORD_TEST_DATA) + "/ks_sample.txt";

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') field += '"', ++i;
        else if (c == '"') quoted = false;
        else field += c;
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("certificate --n 4") {
  auto r = run({"certificate", "--n", "4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["results"]["achieved"] == "6");
  CHECK(j["results"]["achieved_via_cohomology"] == "6");
  CHECK(j["results"]["combination"] == "-19*N(1,1,1,1) + 15*N(2,2)");
  auto rows = j["results"]["rows"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["partition"] == "(1,1,1,1)");
  CHECK(rows[0]["coefficient"] == "-19");
  CHECK(rows[1]["partition"] == "(2,2)");
  CHECK(rows[1]["coefficient"] == "15");
}

TEST_CASE("gn --max 5") {
  auto r = run({"gn", "--max", "5"});
  CHECK(r.code == 0);
  auto rows = json::parse(r.out)["results"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["n"] == "3");
  CHECK(rows[0]["g"] == "48");
  CHECK(rows[1]["g"] == "6");
  CHECK(rows[2]["g"] == "20");
}

TEST_CASE("s-number --partition 3") {
  auto r = run({"s-number", "--partition", "3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["results"]["s_number"] == "-48");
  auto s = run({"s-number", "--partition", "1,1,3"});
  auto j = json::parse(s.out);
  CHECK(j["results"]["s_number"] == "-5120");
  CHECK(j["results"]["minus_alpha"] == "-5120");
}

TEST_CASE("chern, polytope, power-check, gcd, alpha, low-dim") {
  auto chern = json::parse(run({"chern", "--partition", "3"}).out);
  CHECK(chern["results"]["euler_characteristic"] == "24");
  CHECK(chern["results"]["rows"][0]["omega"] == "c2");

  auto poly = json::parse(run({"polytope", "--partition", "2,2"}).out);
  CHECK(poly["results"]["reflexive"] == true);
  CHECK(poly["results"]["vertex_count"] == "9");
  CHECK(poly["results"]["facet_count"] == "6");

  auto power = run({"power-check", "--max", "12"});
  CHECK(power.code == 0);

  auto gcd = json::parse(run({"gcd", "--max", "9"}).out);
  CHECK(gcd["status"] == "pass");
  CHECK(gcd["results"]["rows"][5]["case"] == "II");

  auto alpha = json::parse(run({"alpha", "--n", "4"}).out);
  CHECK(alpha["results"]["rows"][0]["partition"] == "(2,2)");
  CHECK(alpha["results"]["rows"][0]["alpha"] == "486");
  CHECK(alpha["results"]["rows"][0]["s_number"] == "-486");

  auto low = json::parse(run({"low-dim"}).out);
  CHECK(low["status"] == "pass");
  CHECK(low["results"]["y3_euler_characteristic"] == "2");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gn"}).code == 2);
  CHECK(run({"gn", "--max", "x"}).code == 2);
  CHECK(run({"gn", "--max", "5", "--bogus"}).code == 2);
  CHECK(run({"--format", "xml", "gn", "--max", "5"}).code == 2);
  CHECK(run({"--format", "csv", "s-number", "--partition", "3"}).code == 2);
  CHECK(run({"ks", "filter", "--input", kSample, "--target", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors produce a failure envelope and exit 1") {
  auto r = run({"gn", "--max", "2"});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "fail");
  CHECK(j["results"].contains("error"));

  auto bad = run({"s-number", "--partition", "1,0"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["status"] == "fail");
}

TEST_CASE("every subcommand is deterministic and exit code tracks status") {
  const std::vector<std::vector<std::string>> commands{
      {"gn", "--max", "20"},           {"alpha", "--n", "7"},           {"gcd", "--max", "12"},
      {"certificate", "--n", "9"},     {"s-number", "--partition", "2,2"}, {"chern", "--partition", "1,1,2"},
      {"power-check", "--max", "12"},  {"polytope", "--partition", "1,2"}, {"low-dim"},
      {"ks", "ranges", "--input", kSample}};
  for (const auto& cmd : commands) {
    auto a = run(cmd), b = run(cmd);
    CAPTURE(cmd[0]);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    auto j = json::parse(a.out);
    CHECK((a.code == 0) == (j["status"] == "pass"));
  }
  auto p1 = run({"ks", "parse", "--input", kSample});
  auto p2 = run({"ks", "parse", "--input", kSample});
  CHECK(p1.out == p2.out);
}

TEST_CASE("--jobs does not change output") {
  CHECK(run({"alpha", "--n", "9"}).out == run({"--jobs", "4", "alpha", "--n", "9"}).out);
  CHECK(run({"gcd", "--max", "16"}).out == run({"--jobs", "3", "gcd", "--max", "16"}).out);
}

TEST_CASE("csv and json carry identical numbers") {
  const std::vector<std::vector<std::string>> tables{{"gn", "--max", "12"},         {"alpha", "--n", "6"},
                                                     {"gcd", "--max", "10"},        {"certificate", "--n", "7"},
                                                     {"chern", "--partition", "4"}, {"power-check", "--max", "8"},
                                                     {"low-dim"}};
  for (const auto& cmd : tables) {
    auto j = json::parse(run(cmd).out)["results"]["rows"];
    auto csv_args = cmd;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    auto rows = csv_rows(run(csv_args).out);
    CAPTURE(cmd[0]);
    REQUIRE(rows.size() == j.size() + 1);
    const auto& header = rows[0];
    for (std::size_t i = 0; i < j.size(); ++i) {
      for (std::size_t c = 0; c < header.size(); ++c) CHECK(j[i][header[c]] == rows[i + 1][c]);
    }
  }
}

TEST_CASE("ks subcommands") {
  auto parsed = run({"ks", "parse", "--input", kSample});
  CHECK(parsed.code == 0);
  std::istringstream lines(parsed.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    CHECK(j["consistent"] == true);
    ++count;
  }
  CHECK(count == 13);

  auto filtered = run({"ks", "filter", "--input", kSample, "--target", "-1"});
  CHECK(filtered.code == 0);
  int minus = 0;
  std::istringstream fl(filtered.out);
  while (std::getline(fl, line)) {
    auto j = json::parse(line);
    CHECK(j["h11"].get<int>() - j["h21"].get<int>() == -1);
    ++minus;
  }
  CHECK(minus == 4);

  auto ranges = json::parse(run({"ks", "ranges", "--input", kSample}).out);
  CHECK(ranges["status"] == "pass");
  CHECK(ranges["results"]["plus"]["min"] == "16");
  CHECK(ranges["results"]["plus"]["max"] == "90");
  CHECK(ranges["results"]["minus"]["min"] == "15");
  CHECK(ranges["results"]["minus"]["max"] == "89");

  // Standard input, re-serialized in list format.
  auto ks_text = run({"ks", "parse", "--emit", "ks"}, "4 5 H:2,1 [2]\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n");
  CHECK(ks_text.out == "4 5 H:2,1 [2]\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n");

  const std::string bad = "4 5 H:5,45 [-79]\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n";
  auto lenient = run({"ks", "parse"}, bad);
  CHECK(lenient.code == 0);
  CHECK(lenient.err.find("warning") != std::string::npos);
  CHECK(json::parse(lenient.out)["consistent"] == false);
  auto strict = run({"ks", "parse", "--strict"}, bad);
  CHECK(strict.code == 1);
  CHECK(strict.out.empty());
  CHECK(strict.err.find("\"line\":1") != std::string::npos);

  auto out_of_range = run({"ks", "ranges"}, "4 5 H:12,11 [2]\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n");
  CHECK(out_of_range.code == 1);
  CHECK(json::parse(out_of_range.out)["results"]["plus"]["outside_claimed_range"].size() == 1);

  CHECK(run({"ks", "parse", "--input", "/nonexistent/file"}).code == 1);
}
