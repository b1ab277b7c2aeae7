#include "cybord/cli.hpp"

#include "cybord/cohomology.hpp"
#include "cybord/generators.hpp"
#include "cybord/ks_records.hpp"
#include "cybord/numthy.hpp"
#include "cybord/parallel.hpp"
#include "cybord/partitions.hpp"
#include "cybord/polytope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

namespace cybord::cli {

namespace {

using json = nlohmann::ordered_json;

std::string str(const Integer& x) { return to_decimal(x); }
std::string str(std::int64_t x) { return std::to_string(x); }

/// Rows of decimal strings. Drives both the JSON "rows" array and CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  json to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    return arr;
  }

  void write_csv(std::ostream& out) const {
    auto emit = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        const auto& f = fields[i];
        if (f.find_first_of(",\"") != std::string::npos) {
          out << '"';
          for (char c : f) out << (c == '"' ? "\"\"" : std::string(1, c));
          out << '"';
        } else {
          out << f;
        }
      }
      out << '\n';
    };
    emit(columns);
    for (const auto& row : rows) emit(row);
  }
};

struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  bool passed = true;
  std::optional<Table> table;
};

struct Options {
  std::string format = "json";
  unsigned jobs = 1;
};

int emit(const Report& r, const Options& opt, std::ostream& out) {
  if (opt.format == "csv") {
    r.table->write_csv(out);
  } else {
    json env;
    env["command"] = r.command;
    env["parameters"] = r.parameters;
    json results = r.results;
    if (r.table) results["rows"] = r.table->to_json();
    env["results"] = std::move(results);
    env["status"] = r.passed ? "pass" : "fail";
    out << env.dump(2) << '\n';
  }
  return r.passed ? kPass : kFailure;
}

std::string partition_label(const Partition& p) { return "(" + p.to_string() + ")"; }

Report cmd_gn(int max_n) {
  Report r;
  r.command = "gn";
  r.parameters["max"] = str(max_n);
  if (max_n < 3) throw std::domain_error("gn: --max must be >= 3");
  Table t{{"n", "m_{n-1}", "m_{n-2}", "g"}, {}};
  for (int n = 3; n <= max_n; ++n) {
    t.rows.push_back({str(n), str(numthy::m(n - 1)), str(numthy::m(n - 2)), str(numthy::g(n))});
  }
  r.table = std::move(t);
  return r;
}

Report cmd_alpha(int n, unsigned jobs) {
  Report r;
  r.command = "alpha";
  r.parameters["n"] = str(n);
  auto hp = partitions::hat_P(n);
  std::vector<std::vector<std::string>> rows(hp.size());
  std::vector<char> agree(hp.size(), 0);
  parallel_for(hp.size(), jobs, [&](std::size_t i) {
    auto a = partitions::alpha(hp[i]);
    auto s = cohomology::s_number_hypersurface(hp[i]);
    agree[i] = s == -a;
    rows[i] = {partition_label(hp[i]), str(partitions::multinomial(hp[i])), str(a), str(s), str(Integer(-a)),
               agree[i] ? "true" : "false"};
  });
  for (char ok : agree) r.passed = r.passed && ok;
  r.results["partitions"] = str(static_cast<std::int64_t>(hp.size()));
  r.table = Table{{"partition", "multinomial", "alpha", "s_number", "minus_alpha", "agree"}, std::move(rows)};
  return r;
}

Report cmd_gcd(int max_n, unsigned jobs) {
  Report r;
  r.command = "gcd";
  r.parameters["max"] = str(max_n);
  auto rep = generators::verify_gcd_identity(max_n, jobs);
  Table t{{"n", "g", "gcd", "partitions", "case", "p", "q", "passed"}, {}};
  for (const auto& row : rep.rows) {
    std::string c = "-", p = "-", q = "-";
    if (row.tag) {
      c = numthy::case_name(row.tag->tag);
      if (row.tag->power) p = str(row.tag->power->prime);
      if (row.tag->power_plus_one) q = str(row.tag->power_plus_one->prime);
    }
    t.rows.push_back({str(row.n), str(row.g), str(row.gcd), str(static_cast<std::int64_t>(row.partitions)), c, p, q,
                      row.passed ? "true" : "false"});
  }
  json counts = json::object();
  for (const auto& [tag, count] : rep.case_counts) counts[numthy::case_name(tag)] = str(count);
  r.results["case_counts"] = counts;
  r.passed = rep.passed;
  r.table = std::move(t);
  return r;
}

Report cmd_certificate(int n) {
  Report r;
  r.command = "certificate";
  r.parameters["n"] = str(n);
  auto cert = generators::certificate(n);
  auto recheck = generators::evaluate_via_cohomology(cert);
  Table t{{"partition", "coefficient", "alpha", "s_number"}, {}};
  std::string combination;
  for (const auto& e : cert.entries) {
    t.rows.push_back({partition_label(e.sigma), str(e.coefficient), str(partitions::alpha(e.sigma)),
                      str(cohomology::s_number_hypersurface(e.sigma))});
    const bool neg = e.coefficient < 0;
    if (combination.empty()) combination += neg ? "-" : "";
    else combination += neg ? " - " : " + ";
    combination += str(Integer(abs(e.coefficient))) + "*N" + partition_label(e.sigma);
  }
  r.results["generator"] = "y_" + std::to_string(n - 1);
  r.results["target"] = str(cert.target);
  r.results["achieved"] = str(cert.achieved);
  r.results["achieved_via_cohomology"] = str(recheck);
  r.results["candidates"] = str(static_cast<std::int64_t>(cert.candidates));
  r.results["combination"] = combination;
  r.results["integral"] = true;
  r.passed = cert.achieved == make_integer(cert.target) && recheck == cert.achieved;
  r.table = std::move(t);
  return r;
}

Report cmd_s_number(const Partition& sigma) {
  Report r;
  r.command = "s-number";
  r.parameters["partition"] = sigma.to_string();
  if (sigma.n() < 2) throw std::domain_error("s-number: partition must sum to at least 2");
  auto s = cohomology::s_number_hypersurface(sigma);
  r.results["n"] = str(sigma.n());
  r.results["s_number"] = str(s);
  r.results["in_hat_P"] = partitions::in_hat_P(sigma);
  if (partitions::in_hat_P(sigma)) {
    auto a = partitions::alpha(sigma);
    r.results["minus_alpha"] = str(Integer(-a));
    r.passed = s == -a;
  }
  return r;
}

Report cmd_chern(const Partition& sigma) {
  Report r;
  r.command = "chern";
  r.parameters["partition"] = sigma.to_string();
  if (sigma.n() < 2) throw std::domain_error("chern: partition must sum to at least 2");
  auto numbers = cohomology::chern_numbers_hypersurface(sigma);
  Table t{{"omega", "value"}, {}};
  bool c1_vanishes = true;
  for (const auto& cn : numbers) {
    t.rows.push_back({cohomology::chern_monomial_name(cn.omega), str(cn.value)});
    if (cn.omega.parts().back() == 1 && cn.value != 0) c1_vanishes = false;
  }
  auto lemma = cohomology::s_number_hypersurface(sigma);
  auto newton = cohomology::s_number_via_hypersurface_chern(sigma);
  r.results["dimension"] = str(sigma.n() - 1);
  r.results["euler_characteristic"] = str(cohomology::euler_characteristic(sigma));
  r.results["s_number"] = str(lemma);
  r.results["s_number_from_chern_classes"] = str(newton);
  r.results["c1_numbers_vanish"] = c1_vanishes;
  r.passed = c1_vanishes && lemma == newton;
  r.table = std::move(t);
  return r;
}

Report cmd_power_check(int max_n) {
  Report r;
  r.command = "power-check";
  r.parameters["max"] = str(max_n);
  if (max_n < 3) throw std::domain_error("power-check: --max must be >= 3");
  Table t{{"n", "prime", "part", "witness", "witness_ord", "expected_ord", "scanned", "min_ord", "passed"}, {}};
  for (int n = 3; n <= max_n; ++n) {
    auto rep = partitions::check_power(n);
    for (const auto& c : rep.clauses) {
      t.rows.push_back({str(n), str(c.prime), std::string(1, c.part), partition_label(c.witness),
                        str(c.witness_valuation), str(c.expected_valuation),
                        c.part == 'a' ? "-" : str(static_cast<std::int64_t>(c.scanned)),
                        c.part == 'a' ? "-" : str(c.min_valuation), c.passed ? "true" : "false"});
    }
    r.passed = r.passed && rep.passed;
  }
  r.table = std::move(t);
  return r;
}

json point_json(const toric::Point& p) {
  json arr = json::array();
  for (const auto& c : p) arr.push_back(c.get_str());
  return arr;
}

Report cmd_polytope(const Partition& sigma) {
  Report r;
  r.command = "polytope";
  r.parameters["partition"] = sigma.to_string();
  auto poly = toric::polytope_for(sigma);
  auto verdict = toric::verify_reflexive(poly);
  json vertices = json::array(), facets = json::array();
  for (const auto& v : poly.vertices) vertices.push_back(point_json(v));
  for (const auto& a : poly.facets) facets.push_back(point_json(a));
  r.results["dim"] = str(poly.dim);
  r.results["vertex_count"] = str(static_cast<std::int64_t>(poly.vertices.size()));
  r.results["facet_count"] = str(static_cast<std::int64_t>(poly.facets.size()));
  r.results["vertices"] = std::move(vertices);
  r.results["facets"] = std::move(facets);
  r.results["reflexive"] = verdict.reflexive;
  r.results["diagnostics"] = verdict.diagnostics;
  r.passed = verdict.reflexive;
  return r;
}

Report cmd_low_dim() {
  Report r;
  r.command = "low-dim";
  auto table = generators::low_dim_table();
  Table t{{"generator", "formula", "formula_value", "g", "combination", "achieved"}, {}};
  for (const auto& row : table.rows) {
    std::string combination;
    for (const auto& e : row.certificate.entries) {
      if (!combination.empty()) combination += " ";
      combination += str(e.coefficient) + "*N" + partition_label(e.sigma);
    }
    t.rows.push_back({"y_" + std::to_string(row.dim), row.formula, str(row.from_m), str(row.target), combination,
                      str(row.certificate.achieved)});
    r.passed = r.passed && row.from_m == row.target && row.certificate.achieved == make_integer(row.target);
  }
  json reps = json::array();
  for (const auto& rep : table.representatives) {
    reps.push_back({{"partition", rep.sigma.to_string()},
                    {"s_number", str(rep.s_number)},
                    {"euler_characteristic", str(rep.euler)},
                    {"represents", rep.sign > 0 ? "y_2" : rep.sign < 0 ? "-y_2" : "neither"}});
  }
  r.results["dimension_2_representatives"] = std::move(reps);
  r.results["y3_euler_characteristic"] = str(table.y3_euler);
  r.results["y3_h11_minus_h21"] = str(table.y3_hodge_difference);
  r.table = std::move(t);
  return r;
}

int parse_target(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw CLI::ValidationError("--target", "must be +1 or -1");
}

struct KsArgs {
  std::string mode;
  std::string input;
  std::string target = "+1";
  bool strict = false;
  std::string emit = "ndjson";
};

int cmd_ks(const KsArgs& a, std::ostream& out, std::ostream& err, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (!a.input.empty() && a.input != "-") {
    file.open(a.input);
    if (!file) {
      err << json{{"error", "cannot open input"}, {"path", a.input}}.dump() << '\n';
      return kFailure;
    }
    src = &file;
  }
  const int target = a.mode == "parse" ? 0 : parse_target(a.target);
  toric::KSReader reader(*src, a.strict);
  toric::RangeReport ranges;
  std::size_t accepted = 0, rejected = 0, errors = 0, inconsistent = 0;

  while (auto item = reader.next()) {
    if (auto* e = std::get_if<toric::KSParseError>(&*item)) {
      ++errors;
      err << json{{"line", e->line}, {"error", e->message}}.dump() << '\n';
      continue;
    }
    const auto& rec = std::get<toric::KSRecord>(*item);
    if (!rec.consistent()) {
      ++inconsistent;
      err << json{{"line", rec.line}, {"warning", "chi inconsistent with 2(h11 - h21)"}}.dump() << '\n';
    }
    if (a.mode == "parse") {
      out << (a.emit == "ks" ? toric::serialize_ks(rec) : toric::to_ndjson(rec) + "\n");
      continue;
    }
    if (!rec.consistent()) {
      ++rejected;
      continue;
    }
    ++accepted;
    if (a.mode == "filter") {
      if (toric::has_hodge_difference(rec, target)) {
        out << (a.emit == "ks" ? toric::serialize_ks(rec) : toric::to_ndjson(rec) + "\n");
      }
    } else {
      ranges.add(rec);
    }
  }

  if (a.mode != "ranges") return errors == 0 ? kPass : kFailure;

  json env;
  env["command"] = "ks ranges";
  env["parameters"] = {{"input", a.input.empty() ? "-" : a.input}, {"strict", a.strict}};
  auto side_json = [](const toric::RangeSide& s) {
    json j;
    j["target"] = s.target > 0 ? "+1" : "-1";
    j["claimed_range"] = {str(s.claimed_min), str(s.claimed_max)};
    j["records"] = str(static_cast<std::int64_t>(s.count));
    json achieved = json::array();
    for (auto h : s.achieved) achieved.push_back(str(h));
    j["achieved_h11"] = std::move(achieved);
    j["min"] = s.achieved.empty() ? json(nullptr) : json(str(*s.achieved.begin()));
    j["max"] = s.achieved.empty() ? json(nullptr) : json(str(*s.achieved.rbegin()));
    json flagged = json::array();
    for (const auto& [line, h11] : s.flagged) flagged.push_back({{"line", str(static_cast<std::int64_t>(line))}, {"h11", str(h11)}});
    j["outside_claimed_range"] = std::move(flagged);
    return j;
  };
  env["results"] = {{"accepted", str(static_cast<std::int64_t>(accepted))},
                    {"rejected_inconsistent", str(static_cast<std::int64_t>(rejected))},
                    {"parse_errors", str(static_cast<std::int64_t>(errors))},
                    {"plus", side_json(ranges.plus)},
                    {"minus", side_json(ranges.minus)}};
  const bool pass = errors == 0 && ranges.clean();
  env["status"] = pass ? "pass" : "fail";
  out << env.dump(2) << '\n';
  return pass ? kPass : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Calabi-Yau generators of the SU-bordism ring: s-numbers, gcd identity, certificates"};
  app.name("cybord");
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format for table commands")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for independent items")->check(CLI::Range(1u, 256u));

  int max_n = 0, n = 0;
  std::string partition_text;

  auto* gn = app.add_subcommand("gn", "Table of m_i and g(n)");
  gn->add_option("--max", max_n)->required();
  auto* alpha = app.add_subcommand("alpha", "alpha(sigma) and s-numbers over hat_P(n)");
  alpha->add_option("--n", n)->required();
  auto* gcd_cmd = app.add_subcommand("gcd", "Verify gcd alpha = g(n) with case attribution");
  gcd_cmd->add_option("--max", max_n)->required();
  auto* cert = app.add_subcommand("certificate", "Integral combination realizing y_{n-1}");
  cert->add_option("--n", n)->required();
  auto* snum = app.add_subcommand("s-number", "s-number of the hypersurface N_sigma");
  snum->add_option("--partition", partition_text)->required();
  auto* chern = app.add_subcommand("chern", "Chern numbers of N_sigma");
  chern->add_option("--partition", partition_text)->required();
  auto* power = app.add_subcommand("power-check", "Valuations of multinomials at special partitions");
  power->add_option("--max", max_n)->required();
  auto* poly = app.add_subcommand("polytope", "Product of reflexive simplices and its reflexivity");
  poly->add_option("--partition", partition_text)->required();
  auto* low = app.add_subcommand("low-dim", "Generators y_2, y_3, y_4 and their representatives");

  KsArgs ks_args;
  auto* ks = app.add_subcommand("ks", "Reflexive polytope list records");
  ks->add_option("mode", ks_args.mode)->required()->check(CLI::IsMember({"parse", "filter", "ranges"}));
  ks->add_option("--input", ks_args.input, "Input file (default: standard input)");
  ks->add_option("--target", ks_args.target, "h11 - h21 to keep: +1 or -1");
  ks->add_flag("--strict", ks_args.strict, "Reject chi-inconsistent records");
  ks->add_option("--emit", ks_args.emit, "Record output: ndjson or ks")->check(CLI::IsMember({"ndjson", "ks"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const bool table_command = !(snum->parsed() || poly->parsed() || ks->parsed());
  if (opt.format == "csv" && !table_command) {
    err << "error: --format csv applies only to table commands\n";
    return kUsage;
  }

  try {
    if (ks->parsed()) {
      if (ks_args.mode != "parse") parse_target(ks_args.target);
      return cmd_ks(ks_args, out, err, in);
    }
    Report report;
    if (gn->parsed()) report = cmd_gn(max_n);
    else if (alpha->parsed()) report = cmd_alpha(n, opt.jobs);
    else if (gcd_cmd->parsed()) report = cmd_gcd(max_n, opt.jobs);
    else if (cert->parsed()) report = cmd_certificate(n);
    else if (snum->parsed()) report = cmd_s_number(Partition::parse(partition_text));
    else if (chern->parsed()) report = cmd_chern(Partition::parse(partition_text));
    else if (power->parsed()) report = cmd_power_check(max_n);
    else if (poly->parsed()) report = cmd_polytope(Partition::parse(partition_text));
    else if (low->parsed()) report = cmd_low_dim();
    return emit(report, opt, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    json env;
    env["command"] = app.get_subcommands().front()->get_name();
    env["parameters"] = json::object();
    env["results"] = {{"error", e.what()}};
    env["status"] = "fail";
    out << env.dump(2) << '\n';
    return kFailure;
  }
}

}  // namespace cybord::cli
