#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "simulate.hpp"
#include "treelasso/treelasso.hpp"

namespace treelasso::cli {
namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Whitespace or comma separated taxa, '#' comments allowed.
std::vector<Taxon> parse_taxon_list(const std::string& text) {
  std::vector<Taxon> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream words(line);
    std::string word;
    while (words >> word) out.push_back(word);
  }
  return out;
}

TaxonSet taxa_flag(const std::string& flag) {
  TaxonSet out;
  for (const auto& t : split_list(flag)) {
    if (!is_valid_taxon(t)) throw InputError("invalid taxon '" + t + "' in --taxa");
    out.insert(t);
  }
  return out;
}

void report_missing(const CordSet& missing, std::ostream& err) {
  err << "closure incomplete: " << missing.size() << " cord" << (missing.size() == 1 ? "" : "s")
      << " missing\n";
  err << format_cord_set(missing);
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

// ---- reconstruct / closure ------------------------------------------------

struct ReconstructArgs {
  std::string input;
  std::string output;
  std::string trace;
  std::string taxa;
  bool exact = false;
};

int cmd_reconstruct(const ReconstructArgs& args, std::ostream& out, std::ostream& err) {
  ReconstructionOptions options;
  options.closure.tolerance = Tolerance::from_environment();
  options.closure.exact_rational = args.exact;
  const auto distances = parse_cord_distances(read_file(args.input), options.closure.tolerance);
  TaxonSet taxa = taxa_of(distances);
  if (!args.taxa.empty()) {
    for (const auto& t : taxa_flag(args.taxa)) taxa.insert(t);
  }
  const auto result = reconstruct(distances, taxa, options);
  if (!args.trace.empty()) write_output(args.trace, format_closure_trace(result.closure), out);
  if (!result.complete()) {
    report_missing(result.missing, err);
    return kIncomplete;
  }
  write_output(args.output, write_newick(*result.tree) + "\n", out);
  return kSuccess;
}

int cmd_closure(const ReconstructArgs& args, std::ostream& out, std::ostream& err) {
  ClosureOptions options;
  options.tolerance = Tolerance::from_environment();
  options.exact_rational = args.exact;
  const auto distances = parse_cord_distances(read_file(args.input), options.tolerance);
  TaxonSet taxa = taxa_of(distances);
  if (!args.taxa.empty()) {
    for (const auto& t : taxa_flag(args.taxa)) taxa.insert(t);
  }
  const auto trace = closure(distances, taxa, options);
  if (!args.trace.empty()) write_output(args.trace, format_closure_trace(trace), out);
  write_output(args.output, format_cord_distances(trace.final), out);
  if (!trace.complete()) {
    report_missing(trace.missing(), err);
    return kIncomplete;
  }
  return kSuccess;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string tree;
  std::string cords;
  std::string trace;
  bool oracle = false;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream&) {
  const Tolerance tolerance = Tolerance::from_environment();
  const XTree tree = parse_newick(read_file(args.tree));
  const CordSet cords = parse_cord_set(read_file(args.cords));
  for (const auto& t : taxa_of(cords)) {
    if (!tree.find_taxon(t)) throw InputError("cord taxon '" + t + "' is not a leaf of the tree");
  }
  if (!tree.fully_resolved()) throw InputError("tree is not fully resolved");

  out << "property\tvalue\tdetail\n";
  out << "cover\t" << yes_no(is_cover(tree, cords)) << "\t\n";
  out << "triplet-cover\t" << yes_no(is_triplet_cover(tree, cords)) << "\t\n";

  const auto shelling = is_shellable(tree, cords);
  out << "shellable\t" << yes_no(shelling.shellable) << "\t";
  if (shelling.shellable) {
    out << shelling.trace.size() << " steps\n";
  } else {
    out << shelling.unreachable.size() << " unreachable\n";
  }
  if (!args.trace.empty()) write_output(args.trace, format_shelling_trace(shelling.trace), out);

  const auto ordering = is_2dtree(cords, tree.taxon_set());
  out << "2d-tree\t" << yes_no(ordering.has_value()) << "\t";
  if (ordering) {
    for (std::size_t i = 0; i < ordering->size(); ++i) out << (i ? "," : "") << (*ordering)[i];
  }
  out << "\n";

  const auto rank = exact_rank(path_incidence_matrix(tree, cords));
  out << "edge-weight-lasso\t" << yes_no(rank == tree.edge_count()) << "\trank " << rank << " of "
      << tree.edge_count() << "\n";

  const auto graph = graph_necessary_checks(cords, tree.taxon_set());
  out << "connected\t" << yes_no(graph.connected) << "\t\n";
  out << "non-bipartite\t" << yes_no(graph.all_components_non_bipartite) << "\t\n";

  if (args.oracle) {
    if (tree.leaf_count() > kOracleMaxLeaves) {
      out << "topological\tskipped\tmore than " << kOracleMaxLeaves << " taxa\n";
    } else if (!tree.has_proper_weights()) {
      out << "topological\tskipped\tweights are not proper\n";
    } else {
      const auto verdict = topological_lasso_oracle(tree, cords, tolerance);
      if (verdict.refuted) {
        out << "topological\trefuted\t" << write_newick(*verdict.alternative) << "\n";
      } else {
        out << "topological\tgeneric\t" << verdict.topologies_checked << " topologies checked\n";
      }
    }
  }
  return kSuccess;
}

// ---- gencover ---------------------------------------------------------------

struct GencoverArgs {
  std::string tree;
  std::string mode = "min";
  std::string order;
  std::optional<std::uint64_t> seed;
  std::string assignment;
  std::string output;
  bool force = false;
};

Transversal read_assignment(const XTree& tree, const std::string& text, Transversal f) {
  std::size_t line_no = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected \"taxon,taxon,...<TAB>image\"", line_no, 0);
    }
    TaxonSet cluster;
    for (const auto& t : split_list(line.substr(0, tab))) {
      if (!tree.find_taxon(t)) throw ParseError("unknown taxon '" + t + "'", line_no, 0);
      cluster.insert(t);
    }
    const std::string image = line.substr(tab + 1);
    if (!tree.find_taxon(image)) throw ParseError("unknown taxon '" + image + "'", line_no, 0);
    auto it = f.find(cluster);
    if (it == f.end()) throw ParseError("not a cluster of the tree", line_no, 0);
    it->second = image;
  }
  return f;
}

int cmd_gencover(const GencoverArgs& args, std::ostream& out, std::ostream& err) {
  const XTree tree = parse_newick(read_file(args.tree));
  std::vector<Taxon> order = args.order.empty() ? tree.taxa() : parse_taxon_list(read_file(args.order));
  if (args.seed) {
    std::mt19937_64 rng(*args.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  Transversal f;
  if (args.mode == "min") {
    f = min_order_transversal(tree, order);
  } else {
    const auto preference = args.mode == "closest" ? LeafPreference::closest : LeafPreference::furthest;
    f = closest_leaf_transversal(tree, preference, order, Tolerance::from_environment());
  }
  if (!args.assignment.empty()) f = read_assignment(tree, read_file(args.assignment), f);

  const CordSet cords = triplet_cover(tree, f, args.force);
  write_output(args.output, format_cord_set(cords), out);
  const std::size_t expected = 2 * tree.leaf_count() - 3;
  err << "|L| = " << cords.size() << " (2n-3 = " << expected << ")\n";
  if (!args.force && cords.size() != expected) {
    err << "error: stable triplet cover has the wrong size\n";
    return kInconsistent;
  }
  return kSuccess;
}

// ---- treefrom2d -------------------------------------------------------------

struct TreeFrom2dArgs {
  std::string cords;
  std::string ordering;
  std::string output;
};

int cmd_treefrom2d(const TreeFrom2dArgs& args, std::ostream& out, std::ostream& err) {
  const CordSet cords = parse_cord_set(read_file(args.cords));
  std::vector<Taxon> ordering;
  if (!args.ordering.empty()) {
    ordering = split_list(args.ordering);
  } else {
    auto found = is_2dtree(cords, taxa_of(cords));
    if (!found) {
      err << "error: the cords do not form a 2d-tree\n";
      return kInputError;
    }
    ordering = *found;
  }
  const XTree tree = tree_from_2dtree(cords, ordering);
  write_output(args.output, write_newick(tree) + "\n", out);
  return kSuccess;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  SimulationConfig config;
  std::string weight_range = "0.1,1";
  bool timing = false;
  bool per_trial = false;
};

const char* outcome_name(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::success: return "success";
    case TrialOutcome::incomplete: return "incomplete";
    case TrialOutcome::inconsistent: return "inconsistent";
    case TrialOutcome::wrong_tree: return "wrong-tree";
  }
  return "?";
}

int cmd_simulate(SimulateArgs args, std::ostream& out, std::ostream&) {
  auto& config = args.config;
  config.tolerance = Tolerance::from_environment();
  const auto range = split_list(args.weight_range);
  if (range.size() != 2) throw InputError("--weight-range expects lo,hi");
  try {
    config.weight_lo = std::stod(range[0]);
    config.weight_hi = std::stod(range[1]);
  } catch (const std::exception&) {
    throw InputError("--weight-range expects two numbers");
  }
  if (!(config.weight_lo > 0.0) || !(config.weight_lo <= config.weight_hi)) {
    throw InputError("--weight-range needs 0 < lo <= hi");
  }
  if (config.n < 3) throw InputError("--n must be at least 3");
  if (config.trials < 1) throw InputError("--trials must be at least 1");
  if (!(config.dropout >= 0.0 && config.dropout < 1.0)) throw InputError("--dropout must be in [0, 1)");

  const auto results = run_simulation(config);
  if (args.per_trial) {
    out << "trial\toutcome\tcords\tclosure_steps";
    out << (args.timing ? "\tseconds\n" : "\n");
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << i << "\t" << outcome_name(results[i].outcome) << "\t" << results[i].cords << "\t"
          << results[i].closure_steps;
      if (args.timing) out << "\t" << format_number(results[i].seconds);
      out << "\n";
    }
  }

  std::size_t counts[4] = {0, 0, 0, 0};
  double steps = 0.0, cords = 0.0, seconds = 0.0;
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.outcome)];
    steps += static_cast<double>(r.closure_steps);
    cords += static_cast<double>(r.cords);
    seconds += r.seconds;
  }
  const double trials = static_cast<double>(results.size());
  out << "n\ttrials\tseed\tdropout\textra\tdrop_cover\tsuccess_rate\tincomplete_rate\t"
         "inconsistent_rate\twrong_tree_rate\tmean_cords\tmean_closure_steps";
  out << (args.timing ? "\tmean_wall_seconds\n" : "\n");
  out << config.n << "\t" << config.trials << "\t" << config.seed << "\t"
      << format_number(config.dropout) << "\t" << config.extra << "\t"
      << (config.drop_cover ? 1 : 0) << "\t" << format_number(counts[0] / trials) << "\t"
      << format_number(counts[1] / trials) << "\t" << format_number(counts[2] / trials) << "\t"
      << format_number(counts[3] / trials) << "\t" << format_number(cords / trials) << "\t"
      << format_number(steps / trials);
  if (args.timing) out << "\t" << format_number(seconds / trials);
  out << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree reconstruction from partial distances", "treelasso"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "treelasso 0.3.0");

  ReconstructArgs rec;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild the tree from a cord-distance file");
  reconstruct_cmd->add_option("distances", rec.input, "TSV file: taxon, taxon, distance")->required();
  reconstruct_cmd->add_option("-o,--output", rec.output, "Write the Newick tree here");
  reconstruct_cmd->add_option("--trace", rec.trace, "Write the closure trace here");
  reconstruct_cmd->add_option("--taxa", rec.taxa, "Extra taxa, comma separated");
  reconstruct_cmd->add_flag("--exact-rational", rec.exact, "Run the closure in rational arithmetic");

  ReconstructArgs clo;
  auto* closure_cmd = app.add_subcommand("closure", "Close a cord-distance file under the extension rule");
  closure_cmd->add_option("distances", clo.input, "TSV file: taxon, taxon, distance")->required();
  closure_cmd->add_option("-o,--output", clo.output, "Write the closed distances here");
  closure_cmd->add_option("--trace", clo.trace, "Write the closure trace here");
  closure_cmd->add_option("--taxa", clo.taxa, "Extra taxa, comma separated");
  closure_cmd->add_flag("--exact-rational", clo.exact, "Use rational arithmetic");

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "Report lasso properties of a cord set on a tree");
  classify_cmd->add_option("tree", cls.tree, "Newick file")->required();
  classify_cmd->add_option("cords", cls.cords, "Cord file")->required();
  classify_cmd->add_option("--trace", cls.trace, "Write the shelling trace here");
  classify_cmd->add_flag("--oracle-topological", cls.oracle, "Run the topological oracle (at most 9 taxa)");

  GencoverArgs gen;
  auto* gencover_cmd = app.add_subcommand("gencover", "Generate a stable triplet cover");
  gencover_cmd->add_option("tree", gen.tree, "Newick file")->required();
  gencover_cmd->add_option("--transversal", gen.mode, "min, closest or furthest")
      ->check(CLI::IsMember({"min", "closest", "furthest"}));
  gencover_cmd->add_option("--order", gen.order, "File listing the taxa in order");
  gencover_cmd->add_option("--seed", gen.seed, "Shuffle the order with this seed");
  gencover_cmd->add_option("--assignment", gen.assignment, "Cluster assignments: taxa<TAB>image");
  gencover_cmd->add_option("-o,--output", gen.output, "Write the cords here");
  gencover_cmd->add_flag("--force", gen.force, "Accept an unstable transversal");

  TreeFrom2dArgs t2d;
  auto* treefrom2d_cmd = app.add_subcommand("treefrom2d", "Build a tree for which a 2d-tree is a lasso");
  treefrom2d_cmd->add_option("cords", t2d.cords, "Cord file")->required();
  treefrom2d_cmd->add_option("--ordering", t2d.ordering, "Comma separated vertex ordering");
  treefrom2d_cmd->add_option("-o,--output", t2d.output, "Write the Newick tree here");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Reconstruction trials on random trees");
  simulate_cmd->add_option("--n", sim.config.n, "Leaves per tree");
  simulate_cmd->add_option("--trials", sim.config.trials, "Number of trials");
  simulate_cmd->add_option("--seed", sim.config.seed, "Base seed");
  simulate_cmd->add_option("--weight-range", sim.weight_range, "Edge weights lo,hi");
  simulate_cmd->add_option("--dropout", sim.config.dropout, "Drop probability per cord");
  simulate_cmd->add_option("--extra", sim.config.extra, "Random cords added to the cover");
  simulate_cmd->add_flag("--drop-cover", sim.config.drop_cover, "Let dropout hit cover cords too");
  simulate_cmd->add_option("--threads", sim.config.threads, "Worker threads");
  simulate_cmd->add_flag("--timing", sim.timing, "Report wall time (output no longer reproducible)");
  simulate_cmd->add_flag("--per-trial", sim.per_trial, "One line per trial before the summary");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*reconstruct_cmd) return cmd_reconstruct(rec, out, err);
    if (*closure_cmd) return cmd_closure(clo, out, err);
    if (*classify_cmd) return cmd_classify(cls, out, err);
    if (*gencover_cmd) return cmd_gencover(gen, out, err);
    if (*treefrom2d_cmd) return cmd_treefrom2d(t2d, out, err);
    if (*simulate_cmd) return cmd_simulate(sim, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kInputError;
}

}  // namespace treelasso::cli
