#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matroidfix/corpus.hpp"
#include "matroidfix/io.hpp"

namespace {

using namespace mfx;

struct CommonOpts {
  std::string input_file;
  std::string named_entry;
  std::string format = "text";
  std::string engine = "auto";
  std::optional<std::size_t> cap_flag;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
  auto* input = cmd->add_option("--input", o.input_file, "JSON input file");
  auto* named = cmd->add_option("--named", o.named_entry, "catalog entry name");
  if (needs_input) {
    input->excludes(named);
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--engine", o.engine, "group computation route")
      ->check(CLI::IsMember({"auto", "generic", "edge-action", "both"}));
  cmd->add_option("--cap", o.cap_flag, "group size cap");
  cmd->add_flag("--no-timing", o.no_timing, "omit timing fields");
}

std::size_t effective_cap(const CommonOpts& o) {
  if (o.cap_flag) return *o.cap_flag;
  if (const char* env = std::getenv("MATROIDFIX_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      fail(Errc::BadParams, "MATROIDFIX_CAP is not a number");
    }
  }
  return kDefaultGroupCap;
}

Format parse_format(const CommonOpts& o) {
  return o.format == "json" ? Format::Json : Format::Text;
}

InputSpec load_input(const CommonOpts& o) {
  if (!o.named_entry.empty()) {
    return parse_input("{\"type\":\"named\",\"name\":\"" + o.named_entry + "\"}");
  }
  if (o.input_file.empty()) {
    fail(Errc::BadParams, "one of --input or --named is required");
  }
  std::ifstream in(o.input_file);
  if (!in) fail(Errc::BadParams, "cannot read '" + o.input_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

EngineMode parse_engine(const CommonOpts& o) {
  if (o.engine == "generic") return EngineMode::Generic;
  if (o.engine == "edge-action") return EngineMode::EdgeAction;
  if (o.engine == "both") return EngineMode::Both;
  return EngineMode::Auto;
}

struct Analysis {
  FixReport fix;
  std::string engine;
  PermGroup group = PermGroup::trivial(1);
  std::vector<std::string> labels;
};

Analysis analyze_input(const InputSpec& spec, const CommonOpts& o, std::size_t cap) {
  Analysis a;
  if (spec.is_graph()) {
    const Graph& g = spec.graph();
    const EngineMode mode = parse_engine(o);
    const GraphAnalysis ga = analyze_graph(g, spec.kind, mode, cap);
    a.fix = ga.report;
    a.engine = ga.engine;
    for (int i = 0; i < g.edge_count(); ++i) a.labels.push_back(g.edge_label(i));
    if (ga.engine == "edge-action") {
      a.group = edge_action(g, graph_automorphisms(g, cap)).group;
    } else {
      a.group = automorphism_group(graph_matroid(g, spec.kind), cap);
    }
  } else {
    if (o.engine == "edge-action") {
      fail(Errc::BadParams, "--engine edge-action needs a graph input");
    }
    const Matroid m = spec.matroid();
    a.group = automorphism_group(m, cap);
    a.labels = m.ground().labels();
    a.fix = analyze(a.group, a.labels);
    a.engine = "generic";
  }
  return a;
}

int run_report(const CommonOpts& o) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t cap = effective_cap(o);
  const InputSpec spec = load_input(o);
  const Analysis a = analyze_input(spec, o, cap);
  Report r;
  r.input_echo = spec.echo;
  r.fix = a.fix;
  r.engine = a.engine;
  r.timing_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  r.include_timing = !o.no_timing;
  std::cout << emit_report(r, parse_format(o));
  return 0;
}

int run_chain(const CommonOpts& o, const std::string& elements) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t cap = effective_cap(o);
  const InputSpec spec = load_input(o);
  Analysis a = analyze_input(spec, o, cap);

  std::vector<int> seq;
  std::stringstream ss(elements);
  std::string label;
  while (std::getline(ss, label, ',')) {
    const auto it = std::find(a.labels.begin(), a.labels.end(), label);
    if (it == a.labels.end()) {
      fail(Errc::UnknownElement, "unknown element '" + label + "'");
    }
    seq.push_back(static_cast<int>(it - a.labels.begin()));
  }
  a.fix.chain = stabilizer_chain(a.group, seq);

  Report r;
  r.input_echo = spec.echo;
  r.fix = a.fix;
  r.engine = a.engine;
  r.timing_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  r.include_timing = !o.no_timing;
  if (parse_format(o) == Format::Text) {
    std::cout << "chain =";
    for (std::uint64_t v : a.fix.chain) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << emit_report(r, Format::Json);
  }
  return 0;
}

int run_theorems(const CommonOpts& o, const std::string& only) {
  const std::size_t cap = effective_cap(o);
  std::vector<TheoremReport> reports;

  if (!o.named_entry.empty() || !o.input_file.empty()) {
    const InputSpec spec = load_input(o);
    const std::string id = only.empty() ? "samefix" : only;
    if (id == "samefix") {
      reports.push_back(check_samefix(spec.graph(), cap));
    } else if (id == "autogps-cycle" || id == "autogps") {
      reports.push_back(check_autogps(spec.graph(), MatroidKind::Cycle, cap));
    } else if (id == "autogps-bicircular") {
      reports.push_back(check_autogps(spec.graph(), MatroidKind::Bicircular, cap));
    } else if (id == "matthews") {
      reports.push_back(check_matthews(spec.graph()));
    } else if (id == "planar-duality") {
      reports.push_back(check_planar_duality(spec.matroid(), cap));
    } else {
      fail(Errc::BadParams, "checker '" + id + "' does not take an input object");
    }
  } else {
    reports = default_theorem_suite(cap);
    if (!only.empty()) {
      std::erase_if(reports, [&](const TheoremReport& r) {
        return r.id.substr(0, r.id.find('[')) != only;
      });
      if (reports.empty()) fail(Errc::BadParams, "no checker matches '" + only + "'");
    }
  }

  std::cout << emit_theorems(reports, parse_format(o), !o.no_timing);
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == CheckStatus::Fail;
  });
  return failed ? 3 : 0;
}

int run_corpus_cmd(const CommonOpts& o) {
  const std::vector<CriterionResult> results = run_corpus(effective_cap(o));
  bool all_pass = true;
  if (parse_format(o) == Format::Text) {
    for (const CriterionResult& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.index << " " << r.name;
      if (!o.no_timing) std::cout << " (" << r.elapsed_ms << " ms)";
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
  } else {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const CriterionResult& r = results[i];
      os << "  {\"index\": " << r.index << ", \"name\": \"" << r.name
         << "\", \"pass\": " << (r.pass ? "true" : "false");
      if (!o.no_timing) os << ", \"elapsed_ms\": " << r.elapsed_ms;
      os << "}" << (i + 1 < results.size() ? "," : "") << "\n";
      all_pass = all_pass && r.pass;
    }
    os << "]\n";
    std::cout << os.str();
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fixing-number computations for small matroids"};
  app.require_subcommand(1);

  CommonOpts fix_o, aut_o, clones_o, bounds_o, chain_o, theorems_o, corpus_o;
  std::string chain_elements, theorems_only;

  auto* fix_cmd = app.add_subcommand("fix", "fixing number report");
  add_common(fix_cmd, fix_o, true);
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group report");
  add_common(aut_cmd, aut_o, true);
  auto* clones_cmd = app.add_subcommand("clones", "clone class report");
  add_common(clones_cmd, clones_o, true);
  auto* bounds_cmd = app.add_subcommand("bounds", "group order bound report");
  add_common(bounds_cmd, bounds_o, true);
  auto* chain_cmd = app.add_subcommand("chain", "stabilizer chain for given elements");
  add_common(chain_cmd, chain_o, true);
  chain_cmd->add_option("--elements", chain_elements, "comma-separated labels")
      ->required();
  auto* theorems_cmd = app.add_subcommand("theorems", "run theorem checkers");
  add_common(theorems_cmd, theorems_o, false);
  theorems_cmd->add_option("--only", theorems_only, "restrict to one checker id");
  auto* corpus_cmd = app.add_subcommand("corpus", "run the full acceptance corpus");
  add_common(corpus_cmd, corpus_o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (fix_cmd->parsed()) return run_report(fix_o);
    if (aut_cmd->parsed()) return run_report(aut_o);
    if (clones_cmd->parsed()) return run_report(clones_o);
    if (bounds_cmd->parsed()) return run_report(bounds_o);
    if (chain_cmd->parsed()) return run_chain(chain_o, chain_elements);
    if (theorems_cmd->parsed()) return run_theorems(theorems_o, theorems_only);
    if (corpus_cmd->parsed()) return run_corpus_cmd(corpus_o);
  } catch (const mfx::Error& e) {
    std::cerr << "error (" << mfx::errc_name(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case mfx::Errc::BadParams:
      case mfx::Errc::SyntaxError:
      case mfx::Errc::SchemaError:
      case mfx::Errc::LimitError:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
