#include "fibdig/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fibdig/cycles.hpp"
#include "fibdig/digraph.hpp"
#include "fibdig/export.hpp"
#include "fibdig/linedig.hpp"
#include "fibdig/recurrence.hpp"
#include "fibdig/spectral.hpp"
#include "fibdig/verify.hpp"
#include "fibdig/word.hpp"

namespace fibdig {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  Caps caps;
  std::string output;

  std::string family = "fib";
  int d = 2;
  int k = 0;
  std::string format;

  std::vector<int> ds;
  std::vector<std::string> suites;
  int k_min = 1;
  std::optional<int> k_max;

  int rows = 8;

  std::optional<std::size_t> cutoff;
  bool dump = false;
  bool constructive = false;

  std::string dir;
};

// Output target for one command: the stream passed to run_cli or a file from -o.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void require_k(int k) {
  if (k < 1) throw UsageError("-k must be at least 1");
}

void require_d(int d) {
  if (d < 2) throw UsageError("-d must be at least 2");
}

void check_vertex_cap(int d, int k, std::size_t cap) {
  const BigInt n = vertex_count(d, k);
  if (n > cap)
    throw CapExceeded("F(" + std::to_string(d) + "," + std::to_string(k) + ") has " + n.str() +
                      " vertices, above the cap of " + std::to_string(cap));
}

Digraph build_family(const Options& o) {
  require_d(o.d);
  if (o.family == "t") return build_T(o.d);
  require_k(o.k);
  if (o.family == "fib") {
    check_vertex_cap(o.d, o.k, o.caps.vertices);
    return build_fibonacci_digraph(o.d, o.k, o.caps.vertices);
  }
  return build_de_bruijn(o.d, o.k, o.caps.vertices);
}

std::string graph_name(const Options& o) {
  if (o.family == "t") return "T" + std::to_string(o.d);
  const std::string letter = o.family == "fib" ? "F" : "B";
  return letter + "_" + std::to_string(o.d) + "_" + std::to_string(o.k);
}

json graph_json(const Digraph& g, const std::string& name) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({g.label(a.tail), g.label(a.head), a.multiplicity});
  return {{"name", name}, {"vertices", g.labels()}, {"arcs", arcs}, {"metrics", metrics_json(g)}};
}

void write_text(std::ostream& out, const Digraph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    out << g.label(v) << ':';
    for (const Arc& a : g.out_arcs(v))
      for (std::uint64_t c = 0; c < a.multiplicity; ++c) out << ' ' << g.label(a.head);
    out << '\n';
  }
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Digraph g = build_family(o);
  const std::string format = o.format.empty() ? "dot" : o.format;
  Sink sink(o.output, out);
  if (format == "dot") write_dot(*sink, g, graph_name(o));
  else if (format == "csv") write_edge_csv(*sink, g);
  else if (format == "json") *sink << graph_json(g, graph_name(o)).dump(2) << '\n';
  else write_text(*sink, g);
  return exit_code::kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.ds = o.ds.empty() ? std::vector<int>{2} : o.ds;
  for (int d : v.ds) require_d(d);
  v.k_min = o.k_min;
  v.k_max = o.k_max.value_or(o.k_min);
  if (v.k_min < 1 || v.k_max < v.k_min) throw UsageError("need 1 <= --k-min <= --k-max");
  v.suites.insert(o.suites.begin(), o.suites.end());
  v.caps = o.caps;
  json report = run_verification(v);
  json ordered;
  ordered["schema_version"] = report["schema_version"];
  ordered["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  ordered.update(report);
  Sink sink(o.output, out);
  *sink << ordered.dump(2) << '\n';
  return ordered["passed"].get<bool>() ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_d(o.d);
  if (o.rows < 1) throw UsageError("--rows must be at least 1");
  const std::string format = o.format.empty() ? "csv" : o.format;
  Sink sink(o.output, out);
  std::ostream& s = *sink;
  const bool md = format == "markdown";
  if (md) {
    s << "Row n^r counts the admissible words of length r+1 by last digit.\n\n";
    s << "| length | row |";
    for (int j = 0; j < o.d; ++j) s << " n" << j << " |";
    s << " total |\n|---|---|";
    for (int j = 0; j < o.d; ++j) s << "---|";
    s << "---|\n";
  } else {
    // "row" is the table label r for words of length r+1.
    s << "length,row";
    for (int j = 0; j < o.d; ++j) s << ",n" << j;
    s << ",total\n";
  }
  for (int m = 1; m <= o.rows; ++m) {
    const CountVector cv = count_vector(o.d, m);
    if (md) {
      s << "| " << m << " | n^" << m - 1 << " |";
      for (const auto& e : cv.entries) s << ' ' << e << " |";
      s << ' ' << cv.total() << " |\n";
    } else {
      s << m << ',' << m - 1;
      for (const auto& e : cv.entries) s << ',' << e;
      s << ',' << cv.total() << '\n';
    }
  }
  return exit_code::kOk;
}

std::string join_labels(const Digraph& g, std::span<const std::size_t> cycle) {
  std::string s;
  for (std::size_t v : cycle) {
    if (!s.empty()) s += ' ';
    s += g.label(v);
  }
  return s;
}

int cmd_cycles(const Options& o, std::ostream& out, std::ostream& err) {
  require_d(o.d);
  require_k(o.k);
  check_vertex_cap(o.d, o.k, o.caps.vertices);
  const Digraph g = build_fibonacci_digraph(o.d, o.k, o.caps.vertices);
  Sink sink(o.output, out);
  std::ostream& s = *sink;

  if (o.constructive) {
    if (o.d != 2) throw UsageError("--constructive is defined for -d 2 only");
    const SemipancyclicReport rep = verify_semipancyclic(o.k, std::size_t{0}, o.caps.cycle_budget);
    s << "family,parameter,length,valid,vertices\n";
    for (const auto& c : rep.cycles) {
      std::string words;
      for (const Word& w : c.vertices) words += (words.empty() ? "" : " ") + w.to_string();
      s << c.family << ',' << c.parameter << ',' << c.vertices.size() << ','
        << (c.problem ? "no" : "yes") << ',' << words << '\n';
    }
    return rep.constructive_covers ? exit_code::kOk : exit_code::kVerificationFailed;
  }

  const std::size_t cutoff = o.cutoff.value_or(g.order());
  CycleVisitor visit;
  if (o.dump) visit = [&](std::span<const std::size_t> c) { s << c.size() << ": " << join_labels(g, c) << '\n'; };
  const CycleCensus census = enumerate_cycles(g, cutoff, o.caps.cycle_budget, visit);
  if (!o.dump) {
    s << "length,count\n";
    for (auto [len, count] : census.counts) s << len << ',' << count << '\n';
  }
  if (census.truncated) {
    err << "cycle work budget of " << o.caps.cycle_budget << " steps exhausted; counts are lower bounds\n";
    return exit_code::kCapExceeded;
  }
  return exit_code::kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  require_d(o.d);
  require_k(o.k);
  check_vertex_cap(o.d, o.k, o.caps.char_poly);
  const SpectrumReport rep = verify_spectrum(o.d, o.k, o.caps.char_poly);
  Sink sink(o.output, out);
  if (o.format == "json") {
    *sink << json{{"d", rep.d},
                  {"k", rep.k},
                  {"order", rep.order},
                  {"core_order", rep.core_order},
                  {"char_poly", rep.char_poly.to_factored_string()},
                  {"coefficients", polynomial_json(rep.char_poly)},
                  {"expected", rep.expected.to_factored_string()},
                  {"holds", rep.holds}}
                 .dump(2)
          << '\n';
  } else {
    *sink << "F(" << rep.d << "," << rep.k << "): N = " << rep.order << ", core order " << rep.core_order
          << "\nchar_poly = " << rep.char_poly.to_factored_string()
          << "\nexpected  = " << rep.expected.to_factored_string()
          << "\nholds: " << (rep.holds ? "yes" : "no") << '\n';
  }
  return rep.holds ? exit_code::kOk : exit_code::kVerificationFailed;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << text;
}

void export_one(const std::filesystem::path& dir, const std::string& name, const Digraph& g,
                std::ostream& out) {
  std::ostringstream dot;
  std::ostringstream csv;
  write_dot(dot, g, name);
  write_edge_csv(csv, g);
  write_file(dir / (name + ".dot"), dot.str());
  write_file(dir / (name + ".csv"), csv.str());
  write_file(dir / (name + ".json"), graph_json(g, name).dump(2) + "\n");
  out << name << '\n';
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.dir.empty()) throw UsageError("--dir is required");
  const std::vector<int> ds = o.ds.empty() ? std::vector<int>{2} : o.ds;
  const int k_max = o.k_max.value_or(o.k_min);
  if (o.k_min < 1 || k_max < o.k_min) throw UsageError("need 1 <= --k-min <= --k-max");
  for (int d : ds) {
    require_d(d);
    for (int k = o.k_min; k <= k_max; ++k) check_vertex_cap(d, k, o.caps.vertices);
  }
  std::filesystem::create_directories(o.dir);
  for (int d : ds) {
    export_one(o.dir, "T" + std::to_string(d), build_T(d), out);
    for (int k = o.k_min; k <= k_max; ++k)
      export_one(o.dir, "F_" + std::to_string(d) + "_" + std::to_string(k),
                 build_fibonacci_digraph(d, k, o.caps.vertices), out);
  }
  return exit_code::kOk;
}

void add_caps(CLI::App& app, Caps& caps) {
  app.add_option("--max-vertices", caps.vertices, "Largest digraph order to build")
      ->envname("FIBDIG_MAX_VERTICES")
      ->capture_default_str();
  app.add_option("--max-charpoly", caps.char_poly, "Largest order for exact characteristic polynomials")
      ->envname("FIBDIG_MAX_CHARPOLY")
      ->capture_default_str();
  app.add_option("--cycle-budget", caps.cycle_budget, "Search steps allowed for cycle enumeration")
      ->envname("FIBDIG_CYCLE_BUDGET")
      ->capture_default_str();
  app.add_option("--max-isomorphism", caps.isomorphism, "Largest order for isomorphism search")
      ->envname("FIBDIG_MAX_ISOMORPHISM")
      ->capture_default_str();
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"d-Fibonacci digraphs: construction, verification and export", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1, 1);
  add_caps(app, o.caps);

  auto* gen = app.add_subcommand("gen", "Write F(d,k), B(d,k) or T_d");
  gen->add_option("--family", o.family, "fib, debruijn or t")
      ->check(CLI::IsMember({"fib", "debruijn", "t"}))
      ->capture_default_str();
  gen->add_option("-d", o.d, "Alphabet size")->required();
  gen->add_option("-k", o.k, "Word length (not used for t)");
  gen->add_option("--format", o.format, "dot, csv, json or text")
      ->check(CLI::IsMember({"dot", "csv", "json", "text"}));
  gen->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suites, "Suite to run; repeatable (default: all)")
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("-d", o.ds, "Alphabet size; repeatable (default: 2)");
  verify->add_option("--k-min", o.k_min, "Smallest word length")->capture_default_str();
  verify->add_option("--k-max", o.k_max, "Largest word length (default: --k-min)");
  verify->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* table = app.add_subcommand("table", "Last-digit count vectors by word length");
  table->add_option("-d", o.d, "Alphabet size")->required();
  table->add_option("--rows", o.rows, "Number of rows (word lengths 1..rows)")->capture_default_str();
  table->add_option("--format", o.format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));
  table->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* cycles = app.add_subcommand("cycles", "Simple-cycle census of F(d,k) as length,count CSV");
  cycles->add_option("-d", o.d, "Alphabet size")->capture_default_str();
  cycles->add_option("-k", o.k, "Word length")->required();
  cycles->add_option("--cutoff", o.cutoff, "Longest cycle length to count (default: order)");
  cycles->add_flag("--dump", o.dump, "Print every cycle instead of the census");
  cycles->add_flag("--constructive", o.constructive, "Print the explicit cycle families of F(2,k)");
  cycles->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* spectrum = app.add_subcommand("spectrum", "Exact characteristic polynomial of F(d,k)");
  spectrum->add_option("-d", o.d, "Alphabet size")->required();
  spectrum->add_option("-k", o.k, "Word length")->required();
  spectrum->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  spectrum->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* exp = app.add_subcommand("export", "Write DOT, CSV and JSON files for a grid of F(d,k)");
  exp->add_option("--dir", o.dir, "Target directory")->required();
  exp->add_option("-d", o.ds, "Alphabet size; repeatable (default: 2)");
  exp->add_option("--k-min", o.k_min, "Smallest word length")->capture_default_str();
  exp->add_option("--k-max", o.k_max, "Largest word length (default: --k-min)");

  std::vector<std::string> argv_store{kToolName};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return exit_code::kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (cycles->parsed()) return cmd_cycles(o, out, err);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kVerificationFailed;
  }
  return exit_code::kUsage;
}

}  // namespace fibdig
