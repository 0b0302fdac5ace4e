// Command-line front end: graphicality checks, potentially/forcibly
// decisions, sigma tables against the closed-form thresholds, and the
// cycle-extension procedure.
//
// Exit codes: 0 success/match, 1 input error, 2 uncertified or
// budget-limited unknown, 3 invariant breach (formula mismatch or an
// impossible fallback exhaustion).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "potg/degree_sequence.hpp"
#include "potg/extension.hpp"
#include "potg/graph.hpp"
#include "potg/pattern.hpp"
#include "potg/realize.hpp"
#include "potg/sigma.hpp"
#include "potg/switchspace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUncertified = 2;
constexpr int kExitBreach = 3;

struct PatternFlags {
  int cycle = 0;
  int clique = 0;
  int matching = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cycle", cycle, "target cycle length k (C_k)");
    cmd->add_option("--clique", clique, "target clique size k (K_k)");
    cmd->add_option("--matching", matching, "target matching size p (pK_2)");
  }

  potg::PatternGraph resolve() const {
    const int set = (cycle > 0) + (clique > 0) + (matching > 0);
    if (set != 1)
      throw potg::input_error("exactly one of --cycle/--clique/--matching is required");
    if (cycle > 0) return potg::PatternGraph::cycle(cycle);
    if (clique > 0) return potg::PatternGraph::clique(clique);
    return potg::PatternGraph::matching(matching);
  }
};

std::vector<potg::DegreeSequence> load_sequences(const std::string& arg,
                                                 const std::string& file) {
  if (!arg.empty() && !file.empty())
    throw potg::input_error("give a sequence argument or --file, not both");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw potg::input_error("cannot open " + file);
    return potg::read_sequences(in);
  }
  if (arg.empty()) throw potg::input_error("no sequence given");
  auto raw = potg::parse_sequence_line(arg);
  if (!raw) throw potg::input_error("empty sequence");
  return {potg::DegreeSequence::normalize(*raw)};
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw potg::input_error("cannot open output file " + path);
  return file;
}

int cmd_check(const std::string& arg, const std::string& file) {
  for (const auto& s : load_sequences(arg, file)) {
    std::cout << s.to_string();
    if (potg::is_graphical(s))
      std::cout << ": graphical sigma=" << s.sigma() << '\n';
    else
      std::cout << ": not graphical\n";
  }
  return kExitOk;
}

int cmd_decide(bool forcibly, const std::string& arg, const std::string& file,
               const PatternFlags& pf, std::uint64_t max_states,
               const std::string& witness_out) {
  const auto pattern = pf.resolve();
  potg::SearchBudget budget;
  budget.max_states = max_states;
  int rc = kExitOk;
  for (const auto& s : load_sequences(arg, file)) {
    const auto d = forcibly ? potg::is_forcibly(s, pattern, budget)
                            : potg::is_potentially(s, pattern, budget);
    const char* verdict = d.value == potg::Decision::yes   ? "yes"
                          : d.value == potg::Decision::no  ? "no"
                                                           : "unknown";
    std::cout << s.to_string() << ' ' << (forcibly ? "forcibly" : "potentially") << ' '
              << pattern.name() << ": " << verdict << '\n';
    if (d.value == potg::Decision::unknown) rc = kExitUncertified;
    if (d.witness && !witness_out.empty()) {
      std::ofstream f;
      potg::write_graph_text(open_out(f, witness_out), *d.witness);
    }
  }
  return rc;
}

struct SigmaRow {
  potg::SigmaRecord record;
  std::optional<potg::FormulaValue> formula;

  bool formula_applies() const {
    return formula && formula->valid && !record.impossible && record.certified();
  }
  bool matches() const { return !formula_applies() || record.sigma == formula->value; }
};

void emit_rows(std::ostream& out, const std::vector<SigmaRow>& rows,
               const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      auto j = potg::sigma_record_to_json(r.record);
      if (r.formula) {
        j["formula"] = r.formula->value;
        j["formula_valid"] = r.formula->valid;
        j["match"] = r.matches();
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << potg::kSigmaCsvHeader << ",formula,formula_valid,match\n";
    for (const auto& r : rows) {
      out << potg::sigma_record_to_csv(r.record) << ',';
      if (r.formula) out << r.formula->value;
      out << ',' << (r.formula && r.formula->valid ? "1" : "0") << ','
          << (r.matches() ? "1" : "0") << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out << r.record.pattern.name() << " n=" << r.record.n << " sigma=";
      if (r.record.impossible)
        out << "impossible";
      else
        out << r.record.sigma;
      if (r.formula)
        out << " formula=" << r.formula->value
            << (r.formula->valid ? " (valid)" : " (out of stated range)")
            << (r.matches() ? " match" : " MISMATCH");
      if (!r.record.certified()) out << " UNCERTIFIED unknown=" << r.record.unknown_count;
      if (r.record.witness) out << " witness=" << r.record.witness->to_string();
      out << '\n';
    }
  }
}

int cmd_sigma(const PatternFlags& pf, int n, const std::string& n_range,
              std::uint64_t max_states, int jobs, const std::string& format,
              const std::string& out_path) {
  const auto pattern = pf.resolve();
  int lo = n, hi = n;
  if (!n_range.empty()) {
    const auto dots = n_range.find("..");
    if (dots == std::string::npos) throw potg::input_error("--n-range must be A..B");
    lo = std::stoi(n_range.substr(0, dots));
    hi = std::stoi(n_range.substr(dots + 2));
    if (lo < 1 || hi < lo) throw potg::input_error("bad --n-range");
  } else if (n < 1) {
    throw potg::input_error("--n or --n-range is required");
  }
  potg::SearchBudget budget;
  budget.max_states = max_states;
  std::vector<SigmaRow> rows;
  for (int v = lo; v <= hi; ++v) {
    SigmaRow row;
    row.record = potg::sigma_oracle(pattern, v, budget, jobs);
    row.formula = potg::closed_form_sigma(pattern, v);
    rows.push_back(std::move(row));
  }
  std::ofstream file;
  emit_rows(open_out(file, out_path), rows, format);
  bool uncertified = false, mismatch = false;
  for (const auto& r : rows) {
    if (!r.record.certified()) uncertified = true;
    if (!r.matches()) mismatch = true;
  }
  if (mismatch) return kExitBreach;
  if (uncertified) return kExitUncertified;
  return kExitOk;
}

int cmd_extend(const std::string& graph_file, const std::string& cycle_arg, int x, int w,
               std::uint64_t max_states, const std::string& out_path) {
  std::ifstream in(graph_file);
  if (!in) throw potg::input_error("cannot open " + graph_file);
  potg::ExtensionContext ctx;
  ctx.g = potg::read_graph_text(in);
  auto cyc = potg::parse_sequence_line(cycle_arg);
  if (!cyc) throw potg::input_error("empty cycle witness");
  ctx.cycle = potg::CycleWitness{*cyc};
  ctx.x = x;
  ctx.w = w;
  potg::SearchBudget budget;
  budget.max_states = max_states;
  const auto res = potg::extend_cycle(ctx, budget);
  if (res.status == potg::ExtendStatus::budget_exhausted) {
    std::cerr << "FATAL: fallback search exhausted without finding a C_"
              << ctx.cycle.length() + 1
              << " realization; this contradicts the extension theorem\n";
    return kExitBreach;
  }
  std::ofstream file;
  auto& out = open_out(file, out_path);
  potg::write_graph_text(out, res.graph);
  out << "# C" << res.cycle->length() << ':';
  for (int v : res.cycle->vertices) out << ' ' << v;
  out << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"potentially H-graphic degree sequence toolkit"};
  app.require_subcommand(1);

  std::string seq_arg, seq_file, witness_out, n_range, format = "text", out_path;
  std::string graph_file, cycle_arg;
  std::uint64_t max_states = potg::SearchBudget{}.max_states;
  int n = 0, jobs = 1, x = -1, w = -1;

  auto* check = app.add_subcommand("check", "graphicality and sigma of sequences");
  check->add_option("sequence", seq_arg, "sequence, e.g. 2,2,2");
  check->add_option("--file", seq_file, "sequence file (one per line)");

  PatternFlags pot_pf, forc_pf, sig_pf;
  auto* pot = app.add_subcommand("potentially", "does some realization contain H?");
  pot->add_option("sequence", seq_arg);
  pot->add_option("--file", seq_file);
  pot_pf.attach(pot);
  pot->add_option("--max-states", max_states, "realization-walk state cap");
  pot->add_option("--witness-out", witness_out, "write witness graph here");

  auto* forc = app.add_subcommand("forcibly", "does every realization contain H?");
  forc->add_option("sequence", seq_arg);
  forc->add_option("--file", seq_file);
  forc_pf.attach(forc);
  forc->add_option("--max-states", max_states);
  forc->add_option("--witness-out", witness_out, "write counterexample graph here");

  auto* sig = app.add_subcommand("sigma", "brute-force sigma(H, n) vs closed forms");
  sig_pf.attach(sig);
  sig->add_option("--n", n, "sequence length");
  sig->add_option("--n-range", n_range, "range A..B of sequence lengths");
  sig->add_option("--max-states", max_states);
  sig->add_option("--jobs", jobs, "worker threads for per-sequence decisions");
  sig->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  sig->add_option("--out", out_path, "output file (default stdout)");

  auto* ext = app.add_subcommand("extend", "extend a C_k realization to C_{k+1}");
  ext->add_option("--graph", graph_file, "graph text file")->required();
  ext->add_option("--cycle-witness", cycle_arg, "cycle vertices, e.g. 0,1,2,3")->required();
  ext->add_option("--x", x, "vertex off the cycle with d(x) >= floor(k/2)+1")->required();
  ext->add_option("--w", w, "vertex on the cycle with d(w) >= 3")->required();
  ext->add_option("--max-states", max_states);
  ext->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(seq_arg, seq_file);
    if (pot->parsed())
      return cmd_decide(false, seq_arg, seq_file, pot_pf, max_states, witness_out);
    if (forc->parsed())
      return cmd_decide(true, seq_arg, seq_file, forc_pf, max_states, witness_out);
    if (sig->parsed())
      return cmd_sigma(sig_pf, n, n_range, max_states, jobs, format, out_path);
    if (ext->parsed()) return cmd_extend(graph_file, cycle_arg, x, w, max_states, out_path);
  } catch (const potg::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const potg::non_graphical_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
