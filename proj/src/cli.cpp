#include "bookfold/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bookfold/betweenness.hpp"
#include "bookfold/core.hpp"
#include "bookfold/gen.hpp"
#include "bookfold/io.hpp"
#include "bookfold/origami.hpp"
#include "bookfold/reductions.hpp"
#include "bookfold/render.hpp"
#include "bookfold/search.hpp"
#include "bookfold/umpbe2.hpp"

namespace bookfold {

namespace {

constexpr int kOk = 0, kNegative = 1, kError = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

struct Failure {
  int code;
  std::string message;
};

Instance load_instance(const std::string& path) {
  auto text = read_file(path);
  if (!text) throw Failure{kError, "cannot read " + path};
  auto parsed = parse_instance(*text);
  if (!parsed) throw Failure{kError, path + ": " + parsed.error};
  auto errors = check_instance(*parsed.value);
  if (!errors.empty()) throw Failure{kError, path + ": " + errors.front().message};
  return std::move(*parsed.value);
}

BetweennessInstance load_betweenness(const std::string& path) {
  auto text = read_file(path);
  if (!text) throw Failure{kError, "cannot read " + path};
  auto parsed = parse_betweenness(*text);
  if (!parsed) throw Failure{kError, path + ": " + parsed.error};
  return std::move(*parsed.value);
}

std::vector<std::string> load_names(const std::string& path) {
  auto text = read_file(path);
  if (!text) throw Failure{kError, "cannot read " + path};
  auto parsed = parse_name_list(*text);
  if (!parsed) throw Failure{kError, path + ": " + parsed.error};
  return std::move(*parsed.value);
}

std::vector<std::string> ordering_names(const Instance& inst, const Ordering& ord) {
  std::vector<std::string> names;
  names.reserve(ord.size());
  for (std::size_t r = 0; r < ord.size(); ++r) {
    names.push_back(inst.vertex_name(ord.vertex_at(r)));
  }
  return names;
}

int run_validate(const std::string& inst_path, const std::string& ord_path,
                 std::ostream& out) {
  Instance inst = load_instance(inst_path);
  std::vector<std::string> names = load_names(ord_path);
  ValidationReport report = validate_ordering(inst, names);
  if (report.valid()) {
    out << "VALID\n";
    return kOk;
  }
  out << "INVALID\n";
  for (const Violation& v : report.violations) {
    out << "  " << describe(inst, v) << "\n";
  }
  return kNegative;
}

int run_solve(const std::string& inst_path, const std::string& algorithm,
              const std::string& witness_path, std::optional<std::uint64_t> nodes,
              std::optional<double> seconds, std::ostream& out) {
  Instance inst = load_instance(inst_path);

  std::string algo = algorithm;
  if (algo == "auto") {
    algo = (inst.page_count() == 2 && is_matching_partition(inst).ok) ? "umpbe2"
                                                                      : "exact";
  }

  std::optional<Ordering> witness;
  if (algo == "umpbe2") {
    Umpbe2Result result = solve_umpbe2(inst);
    switch (result.status) {
      case Umpbe2Status::Feasible:
        witness = result.ordering;
        break;
      case Umpbe2Status::Infeasible:
        out << "INFEASIBLE\n";
        return kNegative;
      case Umpbe2Status::NotMatching:
        throw Failure{kError, "umpbe2 requires matching pages; vertex '" +
                                  inst.vertex_name(result.offending_vertex) +
                                  "' touched twice by page " +
                                  std::to_string(result.offending_page)};
      case Umpbe2Status::WrongPageCount:
        throw Failure{kError, "umpbe2 requires k = 2"};
      case Umpbe2Status::MalformedInstance:
        throw Failure{kError, "malformed instance"};
    }
  } else if (algo == "exact") {
    SearchConfig cfg;
    cfg.node_budget = nodes;
    cfg.time_budget_seconds = seconds;
    SearchOutcome outcome = solve_exact(inst, cfg);
    if (outcome.verdict == SearchVerdict::BudgetExhausted) {
      throw Failure{kError, "budget exhausted after " +
                                std::to_string(outcome.stats.nodes) + " nodes"};
    }
    if (outcome.verdict == SearchVerdict::Infeasible) {
      out << "INFEASIBLE\n";
      return kNegative;
    }
    witness = outcome.witness;
  } else {
    throw Failure{kError, "unknown algorithm '" + algorithm + "'"};
  }

  out << "FEASIBLE\n";
  if (!witness_path.empty()) {
    if (!write_file(witness_path, emit_name_list(ordering_names(inst, *witness)))) {
      throw Failure{kError, "cannot write " + witness_path};
    }
  }
  return kOk;
}

int run_reduce(const std::string& kind, const std::string& bw_path,
               const std::string& out_path, const std::string& labels_path,
               std::ostream& out) {
  BetweennessInstance bw = load_betweenness(bw_path);
  LabeledInstance lab;
  try {
    lab = kind == "upbe3" ? assemble_upbe3(bw) : assemble_umpbe4(bw);
  } catch (const std::invalid_argument& e) {
    throw Failure{kError, e.what()};
  }
  if (!write_file(out_path, emit_instance(lab.instance))) {
    throw Failure{kError, "cannot write " + out_path};
  }
  if (!labels_path.empty()) {
    if (!write_file(labels_path, emit_name_list(lab.labels()))) {
      throw Failure{kError, "cannot write " + labels_path};
    }
  }
  out << "WROTE " << lab.instance.vertex_count() << " vertices, "
      << lab.instance.edges().size() << " edges\n";
  return kOk;
}

int run_witness(const std::string& kind, const std::string& bw_path,
                const std::string& phi_path, const std::string& out_path,
                std::ostream& out) {
  BetweennessInstance bw = load_betweenness(bw_path);
  std::vector<std::string> phi = load_names(phi_path);
  WitnessResult result;
  try {
    result = kind == "upbe3" ? witness_upbe3(bw, phi) : witness_umpbe4(bw, phi);
  } catch (const std::invalid_argument& e) {
    throw Failure{kError, e.what()};
  }
  if (!result.ok) {
    out << "PHI DOES NOT SATISFY THE INSTANCE\n";
    return kNegative;
  }
  if (!write_file(out_path, emit_name_list(result.order))) {
    throw Failure{kError, "cannot write " + out_path};
  }
  out << "WROTE ordering of " << result.order.size() << " vertices\n";
  return kOk;
}

int run_fold(const std::string& creases, bool cyclic, const std::string& layers_path,
             std::ostream& out) {
  auto pattern = CreasePattern::parse(creases, cyclic);
  if (!pattern) throw Failure{kError, "crease strings use characters M and V only"};
  LayerOrder layers;
  if (cyclic) {
    FoldResult result = fold_cycle(*pattern);
    if (result.status == FoldStatus::MalformedPattern) {
      throw Failure{kError, "cyclic patterns need even length >= 4"};
    }
    if (result.status == FoldStatus::Infeasible) {
      out << "INFEASIBLE\n";
      return kNegative;
    }
    layers = result.layers;
  } else {
    if (pattern->crease_count() == 0) throw Failure{kError, "empty crease string"};
    layers = fold_path(*pattern);
  }
  std::vector<std::string> names;
  names.reserve(layers.bottom_to_top.size());
  for (std::size_t f : layers.bottom_to_top) {
    names.push_back("f" + std::to_string(f + 1));
  }
  out << "FOLDED";
  for (const auto& n : names) out << " " << n;
  out << "\n";
  if (!layers_path.empty()) {
    if (!write_file(layers_path, emit_name_list(names))) {
      throw Failure{kError, "cannot write " + layers_path};
    }
  }
  return kOk;
}

int run_gen(const std::string& kind, std::size_t n, int k, std::uint64_t seed,
            std::ostream& out) {
  Instance inst;
  if (kind == "path") {
    inst = gen_path(n, k, seed);
  } else if (kind == "cycle") {
    inst = gen_cycle(n, k, seed);
  } else {
    inst = gen_random_dag(n, k, seed);
  }
  out << emit_instance(inst);
  return kOk;
}

int run_render(const std::string& inst_path, const std::string& ord_path,
               const std::string& out_path, std::ostream& out) {
  Instance inst = load_instance(inst_path);
  std::optional<Ordering> order;
  if (!ord_path.empty()) {
    std::vector<std::string> names = load_names(ord_path);
    auto ord = Ordering::from_names(inst, names);
    if (!ord) throw Failure{kError, ord_path + ": not a permutation of the vertex set"};
    order = *ord;
  }
  RenderResult result = render_svg(inst, order);
  if (!result.ok) throw Failure{kError, result.error};
  if (!write_file(out_path, result.svg)) {
    throw Failure{kError, "cannot write " + out_path};
  }
  out << "WROTE " << out_path << "\n";
  return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"upward partitioned book embedding toolkit"};
  app.require_subcommand(1);

  std::string inst_path, ord_path, out_path, labels_path, witness_path;
  std::string algorithm = "auto";
  std::string kind, bw_path, phi_path, creases;
  bool cyclic = false;
  std::uint64_t node_budget = 0;
  double time_budget = 0.0;
  std::size_t gen_n = 0;
  int gen_k = 2;
  std::uint64_t gen_seed = 1;

  auto* validate = app.add_subcommand("validate", "check an ordering");
  validate->add_option("inst", inst_path)->required();
  validate->add_option("ord", ord_path)->required();

  auto* solve = app.add_subcommand("solve", "decide an instance");
  solve->add_option("inst", inst_path)->required();
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "exact", "umpbe2"}));
  solve->add_option("--witness", witness_path);
  solve->add_option("--node-budget", node_budget);
  solve->add_option("--time-budget", time_budget);

  auto* reduce = app.add_subcommand("reduce", "emit a hardness reduction");
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"upbe3", "umpbe4"}));
  reduce->add_option("betweenness", bw_path)->required();
  reduce->add_option("out", out_path)->required();
  reduce->add_option("--labels", labels_path);

  auto* witness = app.add_subcommand("witness", "translate phi to an ordering");
  witness->add_option("kind", kind)->required()->check(CLI::IsMember({"upbe3", "umpbe4"}));
  witness->add_option("betweenness", bw_path)->required();
  witness->add_option("phi", phi_path)->required();
  witness->add_option("out", out_path)->required();

  auto* fold = app.add_subcommand("fold", "flat-fold a crease pattern");
  fold->add_option("creases", creases)->required();
  fold->add_flag("--cycle", cyclic);
  fold->add_option("--layers", out_path);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", kind)->required()->check(CLI::IsMember({"path", "cycle", "random"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--k", gen_k);
  gen->add_option("--seed", gen_seed);

  auto* render = app.add_subcommand("render", "draw an arc diagram");
  render->add_option("inst", inst_path)->required();
  render->add_option("--order", ord_path);
  render->add_option("-o,--out", out_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (validate->parsed()) return run_validate(inst_path, ord_path, out);
    if (solve->parsed()) {
      std::optional<std::uint64_t> nodes;
      std::optional<double> seconds;
      if (solve->count("--node-budget")) nodes = node_budget;
      if (solve->count("--time-budget")) seconds = time_budget;
      return run_solve(inst_path, algorithm, witness_path, nodes, seconds, out);
    }
    if (reduce->parsed()) return run_reduce(kind, bw_path, out_path, labels_path, out);
    if (witness->parsed()) return run_witness(kind, bw_path, phi_path, out_path, out);
    if (fold->parsed()) return run_fold(creases, cyclic, out_path, out);
    if (gen->parsed()) return run_gen(kind, gen_n, gen_k, gen_seed, out);
    if (render->parsed()) return run_render(inst_path, ord_path, out_path, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  }
  err << "error: no subcommand\n";
  return kError;
}

}  // namespace bookfold
