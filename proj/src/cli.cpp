#include "buckfire/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include "buckfire/closedform.hpp"
#include "buckfire/error.hpp"
#include "buckfire/markov.hpp"
#include "buckfire/montecarlo.hpp"

namespace buckfire::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoardOptions {
  std::string tree;
  std::string graph_path;
  std::optional<VertexId> start;
};

struct Board {
  Graph graph;
  std::optional<TreeSpec> tree;
  std::string label;
};

void add_board_options(CLI::App& cmd, BoardOptions& opts) {
  auto* tree = cmd.add_option("--tree", opts.tree, "complete k-ary tree, e.g. k=2,n=1");
  auto* graph = cmd.add_option("--graph", opts.graph_path, "graph file (start/edge lines)");
  tree->excludes(graph);
  cmd.add_option("--start", opts.start, "override the start vertex");
}

Board load_board(const BoardOptions& opts) {
  if (opts.tree.empty() == opts.graph_path.empty()) {
    throw UsageError("exactly one of --tree or --graph is required");
  }
  if (!opts.tree.empty()) {
    const TreeSpec spec = parse_tree_spec(opts.tree);
    Graph g = build_complete_kary_tree(spec);
    if (opts.start && *opts.start != g.start()) {
      return {g.with_start(*opts.start), std::nullopt, "tree " + opts.tree};
    }
    return {std::move(g), spec, "tree " + opts.tree};
  }
  Graph g = read_graph_file(opts.graph_path);
  if (opts.start) g = g.with_start(*opts.start);
  return {std::move(g), std::nullopt, "graph " + opts.graph_path};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

nlohmann::json fractions_json(const std::vector<Rational>& p) {
  auto arr = nlohmann::json::array();
  for (const auto& q : p) arr.push_back(to_fraction_string(q));
  return arr;
}

nlohmann::json floats_json(const std::vector<double>& xs) {
  auto arr = nlohmann::json::array();
  for (double x : xs) arr.push_back(x);
  return arr;
}

std::vector<double> to_doubles(const std::vector<Rational>& p) {
  std::vector<double> xs;
  xs.reserve(p.size());
  for (const auto& q : p) xs.push_back(to_double(q));
  return xs;
}

std::vector<Rational> closed_form_probabilities(const Board& board) {
  if (!board.tree) {
    throw Error(ErrorCode::ClosedFormUnavailable,
                "closed forms exist only for complete k-ary trees started at the root");
  }
  const auto& levels = board.graph.levels();
  std::map<int, Rational> by_level;
  std::vector<Rational> p;
  p.reserve(levels.size());
  for (int level : levels) {
    auto it = by_level.find(level);
    if (it == by_level.end()) {
      it = by_level.emplace(level, closedform::p_kary(board.tree->k, board.tree->n, level)).first;
    }
    p.push_back(it->second);
  }
  return p;
}

struct McSummary {
  montecarlo::EmpiricalDistribution dist;
  std::vector<double> freq;
  std::vector<double> sigma;
  bool within_4sigma = true;
};

McSummary summarize_mc(montecarlo::EmpiricalDistribution dist, const std::vector<Rational>& exact) {
  McSummary s{std::move(dist), {}, {}, true};
  for (std::size_t v = 0; v < exact.size(); ++v) {
    const double p = to_double(exact[v]);
    const double f = s.dist.frequency(v);
    const double sigma = montecarlo::binomial_sigma(p, s.dist.trials);
    s.freq.push_back(f);
    s.sigma.push_back(sigma);
    if (std::abs(f - p) > 4.0 * sigma + 1e-12) s.within_4sigma = false;
  }
  return s;
}

struct SolveArgs {
  BoardOptions board;
  std::string method = "all";
  std::string output = "table";
  std::string policy = "lowest";
  std::uint64_t trials = 1'000'000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  static const std::vector<std::string> kMethods{"abacus", "markov", "closed", "mc", "all"};
  if (std::find(kMethods.begin(), kMethods.end(), args.method) == kMethods.end()) {
    throw UsageError("unknown method '" + args.method + "'");
  }
  if (args.output != "json" && args.output != "csv" && args.output != "table") {
    throw UsageError("unknown output '" + args.output + "'");
  }
  if (args.method == "mc" && !args.seed) {
    throw UsageError("--method mc requires an explicit --seed");
  }
  const Board board = load_board(args.board);
  const bool all = args.method == "all";

  std::vector<std::pair<std::string, std::vector<Rational>>> exact;
  if (all || args.method == "abacus") {
    const abacus::RunOptions options{parse_policy(args.policy), abacus::fire_cap_from_env()};
    const auto result = abacus::run(abacus::augment(board.graph), options);
    exact.emplace_back("abacus", abacus::win_probabilities(result.terminals));
  }
  if (all || args.method == "markov" || args.method == "mc") {
    exact.emplace_back("markov", markov::win_probabilities(board.graph));
  }
  if (args.method == "closed" || (all && board.tree)) {
    exact.emplace_back("closed", closed_form_probabilities(board));
  }
  std::optional<McSummary> mc;
  if (args.method == "mc" || (all && args.seed)) {
    mc = summarize_mc(montecarlo::estimate(board.graph, args.trials, *args.seed, args.workers),
                      exact.back().second);
  }
  if (args.method == "mc") exact.clear();  // markov served only as the reference

  bool agree = true;
  for (const auto& [name, p] : exact) {
    if (p != exact.front().second || sum(p) != 1) agree = false;
  }
  const bool statistical_ok = !mc || mc->within_4sigma;
  const std::string verdict = agree ? "AGREE" : "DISAGREE";
  const std::size_t n = board.graph.vertex_count();

  if (args.output == "json") {
    nlohmann::json doc;
    doc["board"] = board.label;
    doc["start"] = board.graph.start();
    doc["vertices"] = n;
    doc["methods"] = nlohmann::json::object();
    for (const auto& [name, p] : exact) {
      doc["methods"][name] = {{"exact", fractions_json(p)}, {"float", floats_json(to_doubles(p))}};
    }
    if (mc) {
      doc["methods"]["mc"] = {{"trials", mc->dist.trials},
                              {"seed", mc->dist.seed},
                              {"wins", mc->dist.wins},
                              {"freq", floats_json(mc->freq)},
                              {"sigma", floats_json(mc->sigma)},
                              {"within_4sigma", mc->within_4sigma}};
    }
    doc["verdict"] = verdict;
    out << doc.dump(2) << '\n';
  } else if (args.output == "csv") {
    std::vector<std::string> header{"vertex"};
    for (const auto& [name, p] : exact) {
      header.push_back(name + "_exact");
      header.push_back(name + "_float");
    }
    if (mc) {
      header.push_back("mc_freq");
      header.push_back("mc_sigma");
    }
    write_csv_row(out, header);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::string> row{std::to_string(v)};
      for (const auto& [name, p] : exact) {
        row.push_back(to_fraction_string(p[v]));
        row.push_back(format_double(to_double(p[v])));
      }
      if (mc) {
        row.push_back(format_double(mc->freq[v]));
        row.push_back(format_double(mc->sigma[v]));
      }
      write_csv_row(out, row);
    }
  } else {
    out << board.label << ", start " << board.graph.start() << ", " << n << " vertices\n";
    out << std::left << std::setw(8) << "vertex";
    for (const auto& [name, p] : exact) out << std::setw(34) << name;
    if (mc) out << "mc (freq +/- sigma)";
    out << '\n';
    for (std::size_t v = 0; v < n; ++v) {
      out << std::setw(8) << v;
      for (const auto& [name, p] : exact) {
        out << std::setw(34) << (to_fraction_string(p[v]) + " (" + format_double(to_double(p[v])) + ")");
      }
      if (mc) out << format_double(mc->freq[v]) << " +/- " << format_double(mc->sigma[v]);
      out << '\n';
    }
    if (mc) out << "mc: " << (mc->within_4sigma ? "within 4 sigma" : "OUTSIDE 4 sigma") << '\n';
    out << "verdict: " << verdict << '\n';
  }
  if (!agree) return kDisagree;
  if (!statistical_ok) return kStatistical;
  return kOk;
}

int cmd_trace(const BoardOptions& board_opts, const std::string& policy, std::ostream& out) {
  const Board board = load_board(board_opts);
  const abacus::RunOptions options{parse_policy(policy), abacus::fire_cap_from_env()};
  abacus::write_trace_jsonl(out, abacus::trace_run(abacus::augment(board.graph), options));
  return kOk;
}

int cmd_sequence(int k, int n_max, std::ostream& out) {
  if (k < 2 || n_max < 0) throw UsageError("sequence needs --k >= 2 and --n-max >= 0");
  const auto table = closedform::sequence_table(k, n_max);
  std::vector<std::string> header{"n", "a(k,n)", "t(k,n)", "p(n,0)", "p(n,0)_float"};
  if (k == 2) header.push_back("limit_error");
  write_csv_row(out, header);
  const RootTwo limit = closedform::limit_p_binary(0);
  for (int n = 0; n <= n_max; ++n) {
    const Rational p = closedform::p_kary(k, n, 0);
    std::vector<std::string> row{std::to_string(n),
                                 table.values[static_cast<std::size_t>(n)].get_str(),
                                 closedform::t_kary(k, n).get_str(), to_fraction_string(p),
                                 format_double(to_double(p))};
    if (k == 2) row.push_back(format_double(closedform::distance_to(p, limit)));
    write_csv_row(out, row);
  }
  return kOk;
}

int cmd_mc(const BoardOptions& board_opts, std::uint64_t trials, std::optional<std::uint64_t> seed,
           unsigned workers, std::ostream& out) {
  if (!seed) throw UsageError("mc requires an explicit --seed");
  if (trials == 0) throw UsageError("--trials must be positive");
  const Board board = load_board(board_opts);
  const auto exact = markov::win_probabilities(board.graph);
  const auto s = summarize_mc(montecarlo::estimate(board.graph, trials, *seed, workers), exact);
  nlohmann::json doc{{"trials", s.dist.trials},
                     {"seed", s.dist.seed},
                     {"wins", s.dist.wins},
                     {"freq", floats_json(s.freq)},
                     {"exact", fractions_json(exact)},
                     {"sigma", floats_json(s.sigma)}};
  out << doc.dump() << '\n';
  return s.within_4sigma ? kOk : kStatistical;
}

}  // namespace

TreeSpec parse_tree_spec(const std::string& text) {
  static const std::regex kPart(R"(\s*([kn])\s*=\s*(-?\d+)\s*)");
  std::optional<int> k, n;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, kPart)) {
      throw Error(ErrorCode::InvalidTreeSpec, "bad tree spec component '" + part + "'");
    }
    auto& slot = m[1] == "k" ? k : n;
    if (slot) throw Error(ErrorCode::InvalidTreeSpec, "repeated key in tree spec '" + text + "'");
    slot = std::stoi(m[2]);
  }
  if (!k || !n) throw Error(ErrorCode::InvalidTreeSpec, "tree spec needs k=<int>,n=<int>");
  TreeSpec spec{*k, *n};
  validate(spec);
  return spec;
}

abacus::FiringPolicy parse_policy(const std::string& text) {
  if (text == "lowest") return abacus::LowestIndex{};
  if (text == "highest") return abacus::HighestIndex{};
  if (text == "queue") return abacus::Queue{};
  static const std::regex kRandom(R"(random:(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, kRandom)) {
    try {
      return abacus::RandomSeeded{std::stoull(m[1])};
    } catch (const std::out_of_range&) {
    }
  }
  throw Error(ErrorCode::Parse, "unknown firing policy '" + text +
                                    "' (lowest, highest, queue, random:<seed>)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact winning probabilities for Pass the Buck", "buckfire"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "per-vertex winning probabilities");
  add_board_options(*solve_cmd, solve.board);
  solve_cmd->add_option("--method", solve.method, "abacus|markov|closed|mc|all")
      ->capture_default_str();
  solve_cmd->add_option("--output", solve.output, "json|csv|table")->capture_default_str();
  solve_cmd->add_option("--policy", solve.policy, "abacus firing policy")->capture_default_str();
  solve_cmd->add_option("--trials", solve.trials, "Monte Carlo trials")->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "Monte Carlo seed");
  solve_cmd->add_option("--workers", solve.workers, "Monte Carlo threads (0 = all cores)");

  BoardOptions trace_board;
  std::string trace_policy = "lowest";
  auto* trace_cmd = app.add_subcommand("trace", "abacus trace as JSON lines");
  add_board_options(*trace_cmd, trace_board);
  trace_cmd->add_option("--policy", trace_policy, "lowest|highest|queue|random:<seed>")
      ->capture_default_str();

  int seq_k = 2;
  int seq_n_max = 0;
  auto* seq_cmd = app.add_subcommand("sequence", "a(k,n), totals and root probabilities as CSV");
  seq_cmd->add_option("--k", seq_k, "branching factor")->capture_default_str();
  seq_cmd->add_option("--n-max", seq_n_max, "last level count")->required();

  BoardOptions mc_board;
  std::uint64_t mc_trials = 1'000'000;
  std::optional<std::uint64_t> mc_seed;
  unsigned mc_workers = 0;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate against exact values");
  add_board_options(*mc_cmd, mc_board);
  mc_cmd->add_option("--trials", mc_trials, "number of games")->capture_default_str();
  mc_cmd->add_option("--seed", mc_seed, "generator seed (required)");
  mc_cmd->add_option("--workers", mc_workers, "threads (0 = all cores)");

  std::vector<std::string> storage{"buckfire"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*trace_cmd) return cmd_trace(trace_board, trace_policy, out);
    if (*seq_cmd) return cmd_sequence(seq_k, seq_n_max, out);
    if (*mc_cmd) return cmd_mc(mc_board, mc_trials, mc_seed, mc_workers, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Parse:
      case ErrorCode::Disconnected:
      case ErrorCode::SelfLoop:
      case ErrorCode::DuplicateEdge:
      case ErrorCode::StartOutOfRange:
        return kParse;
      case ErrorCode::InvalidTreeSpec:
      case ErrorCode::ClosedFormUnavailable:
        return kUsage;
      default:
        return kFailure;
    }
  }
  return kUsage;
}

}  // namespace buckfire::cli
