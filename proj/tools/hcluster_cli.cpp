#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcluster/errors.hpp"
#include "hcluster/exchange.hpp"
#include "hcluster/k0.hpp"
#include "hcluster/serialization.hpp"
#include "hcluster/tilting.hpp"
#include "hcluster/verify.hpp"

using namespace hcluster;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kSuiteFailed = 1,
  kUsage = 2,
  kModel = 3,
  kInvalidObject = 4,
  kNotATilting = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 0;
  int d = 0;
  std::string format;
  std::string output;
  bool count = false;
  std::optional<std::size_t> limit;
  std::string tilting, tilting_t, tilting_u;
  std::string object, u;
  std::string suite = "all";
};

ModelParams params_of(const Config& c) {
  if (c.n < 1 || c.d < 1) throw UsageError("--n and --d are required and must be >= 1");
  return ModelParams(c.n, c.d);
}

bool table_format(const Config& c) {
  if (!c.format.empty()) return c.format == "table";
  return c.output.empty() && ::isatty(STDOUT_FILENO);
}

// Accepts a file holding a JSON tilting, inline JSON, or "contains:<v>".
ClusterTilting read_tilting(const std::string& arg, const char* flag, const ModelParams& params) {
  if (arg.empty()) throw UsageError(std::string(flag) + " is required");
  if (arg.rfind("contains:", 0) == 0) {
    int v = 0;
    try {
      v = std::stoi(arg.substr(9));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": bad vertex in '" + arg + "'");
    }
    return star_tilting(v, params);
  }
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw UsageError(std::string(flag) + ": neither a readable file nor JSON: '" + arg + "'");
  }
  // Also accept the {"tiltings": [...]} listing emitted by the tiltings command.
  if (j.is_object() && j.contains("tiltings") && j["tiltings"].size() == 1) j = j["tiltings"][0];
  return tilting_from_json(j, params);
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string matrix_table(const IntMatrix& m, const std::vector<Indec>& rows, const std::vector<Indec>& cols) {
  std::size_t w = 3;
  for (const auto& c : cols) w = std::max(w, c.to_string().size());
  std::size_t rw = 0;
  for (const auto& r : rows) rw = std::max(rw, r.to_string().size());
  std::ostringstream out;
  out << std::string(rw, ' ');
  for (const auto& c : cols) out << "  " << pad(c.to_string(), w);
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << pad(rows[i].to_string(), rw);
    for (std::size_t j = 0; j < cols.size(); ++j) out << "  " << pad(std::to_string(m(i, j)), w);
    out << '\n';
  }
  return out.str();
}

std::string report_table(const SuiteReport& r) {
  std::ostringstream out;
  out << r.suite << " (n=" << r.params.n() << ", d=" << r.params.d() << "): " << to_string(r.status)
      << ", " << r.cases_run << " cases, " << r.failures.size() << " failures, " << r.elapsed.count()
      << " ms\n";
  for (const auto& f : r.failures) {
    out << "  case " << f.descriptor.dump() << "\n    expected " << f.expected << "\n    actual   "
        << f.actual << '\n';
  }
  return out.str();
}

struct Output {
  json doc;
  std::string table;
};

Output cmd_indecs(const Config& c) {
  const ModelParams params = params_of(c);
  const auto xs = enumerate_indecs(params);
  if (c.count) return {json{{"count", xs.size()}}, std::to_string(xs.size()) + "\n"};
  json arr = json::array();
  std::string table;
  for (const auto& x : xs) {
    arr.push_back(to_json(x));
    table += x.to_string() + "\n";
  }
  return {json{{"params", {{"n", c.n}, {"d", c.d}}}, {"indecs", arr}}, table};
}

Output cmd_tiltings(const Config& c) {
  const ModelParams params = params_of(c);
  const auto ts = enumerate_tiltings(params, c.limit);
  if (c.count) return {json{{"count", ts.size()}}, std::to_string(ts.size()) + "\n"};
  json arr = json::array();
  std::string table;
  for (const auto& t : ts) {
    arr.push_back(to_json(t));
    std::string line;
    for (const auto& x : t.summands()) line += (line.empty() ? "" : "  ") + x.to_string();
    table += line + "\n";
  }
  return {json{{"params", {{"n", c.n}, {"d", c.d}}}, {"tiltings", arr}}, table};
}

Output cmd_index(const Config& c) {
  const ModelParams params = params_of(c);
  const ClusterTilting tilting = read_tilting(c.tilting, "--tilting", params);
  if (c.object.empty()) throw UsageError("--object is required");
  const Indec x = Indec::parse(c.object, params);
  const IndexResult r = compute_index(x, tilting);
  json doc = {{"object", to_json(x)}, {"index", to_json(r.value)}, {"route", std::string(to_string(r.route))}};
  if (r.angle) doc["staircase"] = to_json(*r.angle);
  return {doc, to_string(r.value) + "\n"};
}

Output cmd_cvectors(const Config& c) {
  const ModelParams params = params_of(c);
  const ClusterTilting tilting_t = read_tilting(c.tilting_t, "--tilting-t", params);
  const ClusterTilting tilting_u = read_tilting(c.tilting_u, "--tilting-u", params);
  if (!c.u.empty()) {
    const Indec u = Indec::parse(c.u, params);
    const CVector cv = c_vector(u, tilting_u, tilting_t);
    const SignClass cls = sign_coherence(cv);
    json doc = to_json(cv);
    doc["sign"] = std::string(to_string(cls));
    std::string table;
    for (std::size_t k = 0; k < cv.basis_t.size(); ++k) {
      table += cv.basis_t.summands()[k].to_string() + "  " + std::to_string(cv.values[k]) + "\n";
    }
    table += "sign: " + std::string(to_string(cls)) + "\n";
    return {doc, table};
  }
  const IndexTable table_u(tilting_u);
  const IntMatrix m = c_matrix(table_u, tilting_t);
  json doc = {{"rows", to_json(tilting_u)}, {"columns", to_json(tilting_t)}, {"c_matrix", to_json(m)}};
  return {doc, matrix_table(m, tilting_u.summands(), tilting_t.summands())};
}

Output cmd_mutations(const Config& c) {
  const ModelParams params = params_of(c);
  const ClusterTilting tilting = read_tilting(c.tilting, "--tilting", params);
  if (c.u.empty()) throw UsageError("--u is required");
  const Indec u = Indec::parse(c.u, params);
  const ExchangeReport report = exchange_report(tilting, u);
  json doc = to_json(report);
  std::string table = "u = " + u.to_string() + "\nmutations:";
  for (const auto& v : report.mutations) table += " " + v.to_string();
  if (report.mutations.empty()) table += " none";
  table += "\nexchange pair: " + std::string(report.is_exchange_pair ? "yes" : "no");
  if (report.u_star) table += " (u* = " + report.u_star->to_string() + ")";
  table += "\n";
  return {doc, table};
}

Output cmd_check(const Config& c, int& code) {
  const auto& names = suite_names();
  std::vector<std::string> chosen;
  if (c.suite == "all") {
    chosen = names;
  } else {
    chosen = {c.suite};
  }
  std::vector<ModelParams> grid;
  if (c.n != 0 || c.d != 0) {
    grid = {params_of(c)};
  } else {
    grid = default_grid();
  }
  json arr = json::array();
  std::string table;
  auto emit = [&](const SuiteReport& r) {
    if (r.failed()) code = kSuiteFailed;
    arr.push_back(to_json(r));
    table += report_table(r);
  };
  bool counterexample_done = false;
  for (const ModelParams& p : grid) {
    bool need_sweep = false;
    for (const auto& s : chosen) need_sweep |= s != "counterexample";
    std::optional<Sweep> sweep;
    if (need_sweep) sweep.emplace(p);
    for (const auto& s : chosen) {
      if (s == "counterexample") {
        if (!counterexample_done) emit(reproduce_counterexample());
        counterexample_done = true;
        continue;
      }
      emit(run_suite(s, *sweep));
    }
  }
  return {json{{"reports", arr}, {"passed", code == kOk}}, table};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the type-A model of higher cluster categories"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "rank n >= 1");
    sub->add_option("--d", c.d, "dimension parameter d >= 1");
    sub->add_option("--format", c.format, "json or table (default: table on a terminal, else json)")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output", c.output, "write the result to this file");
  };
  const std::string tilting_help = "tilting: JSON file, inline JSON, or contains:<vertex>";

  auto* indecs = app.add_subcommand("indecs", "list indecomposable objects");
  add_common(indecs);
  indecs->add_flag("--count", c.count, "print only the number");

  auto* tiltings = app.add_subcommand("tiltings", "list cluster tilting objects");
  add_common(tiltings);
  tiltings->add_flag("--count", c.count, "print only the number");
  tiltings->add_option("--limit", c.limit, "stop after this many");

  auto* index = app.add_subcommand("index", "index of an object with respect to a tilting");
  add_common(index);
  index->add_option("--tilting", c.tilting, tilting_help);
  index->add_option("--object", c.object, "object, e.g. 4,6,8,10");

  auto* cvectors = app.add_subcommand("cvectors", "c-vectors of U with respect to T");
  add_common(cvectors);
  cvectors->add_option("--tilting-t", c.tilting_t, tilting_help);
  cvectors->add_option("--tilting-u", c.tilting_u, tilting_help);
  cvectors->add_option("--u", c.u, "single summand of U");

  auto* mutations = app.add_subcommand("mutations", "mutations and exchange data of a summand");
  add_common(mutations);
  mutations->add_option("--tilting", c.tilting, tilting_help);
  mutations->add_option("--u", c.u, "summand to mutate");

  auto* check = app.add_subcommand("check", "run verification suites (default grid unless --n/--d)");
  add_common(check);
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  check->add_option("--suite", c.suite, "suite name or all")->check(CLI::IsMember(allowed));

  auto* counterexample = app.add_subcommand("counterexample", "reproduce the n=3, d=3 counterexample");
  add_common(counterexample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  int code = kOk;
  try {
    Output out;
    if (*indecs) out = cmd_indecs(c);
    else if (*tiltings) out = cmd_tiltings(c);
    else if (*index) out = cmd_index(c);
    else if (*cvectors) out = cmd_cvectors(c);
    else if (*mutations) out = cmd_mutations(c);
    else if (*check) out = cmd_check(c, code);
    else if (*counterexample) {
      const SuiteReport r = reproduce_counterexample();
      if (r.failed()) code = kSuiteFailed;
      out = {to_json(r), report_table(r)};
    }

    const std::string text = table_format(c) ? out.table : out.doc.dump(2) + "\n";
    if (c.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.output);
      if (!f) throw UsageError("cannot write " + c.output);
      f << text;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidObject& e) {
    std::cerr << "invalid object: " << e.what() << '\n';
    return kInvalidObject;
  } catch (const NotATilting& e) {
    std::cerr << "not a cluster tilting object: " << e.what() << '\n';
    return kNotATilting;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kModel;
  }
  return code;
}
