// ldpsim command-line interface.
//
// Exit codes: 0 success, 1 usage or input error, 2 acceptance failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/rng.hpp"
#include "ldpsim/core/transcript_io.hpp"
#include "ldpsim/harness/acceptance.hpp"
#include "ldpsim/harness/experiment.hpp"
#include "ldpsim/harness/report.hpp"
#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/instance_io.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/randomizers/audit.hpp"
#include "ldpsim/randomizers/randomizer_codec.hpp"
#include "ldpsim/solvers/sizing.hpp"
#include "ldpsim/twoparty/channel.hpp"
#include "ldpsim/twoparty/enumerate.hpp"
#include "ldpsim/twoparty/lift.hpp"
#include "ldpsim/twoparty/lower.hpp"
#include "ldpsim/twoparty/rounds.hpp"
#include "ldpsim/twoparty/simultaneous.hpp"
#include "ldpsim/twoparty/tree_protocol.hpp"

namespace ldpsim {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAcceptanceFailure = 2;

// Bad user input that is not a parse error of the command line itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Accepts a plain number or ln<x> / ln(<x>), e.g. "ln3".
double parse_epsilon(const std::string& text) {
  std::string body = text;
  bool log = false;
  if (body.rfind("ln", 0) == 0) {
    log = true;
    body = body.substr(2);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
      body = body.substr(1, body.size() - 2);
    }
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != body.size()) {
    throw UsageError("cannot parse epsilon '" + text + "'");
  }
  if (log) v = std::log(v);
  if (!(v > 0) || !std::isfinite(v)) {
    throw UsageError("epsilon must be positive, got '" + text + "'");
  }
  return v;
}

// Output sink: --out path or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- protocols

struct LoadedProtocol {
  std::unique_ptr<TwoPartyProtocol> protocol;
  TreeProtocol* tree = nullptr;  // set when the file is a tree
  SimultaneousProtocol* simultaneous = nullptr;
};

LoadedProtocol load_protocol(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream lines(text);
  std::string line, head;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream(line) >> head;
    break;
  }
  std::istringstream in(text);
  LoadedProtocol out;
  if (head == "tree") {
    auto p = std::make_unique<TreeProtocol>(read_tree_protocol(in));
    out.tree = p.get();
    out.protocol = std::move(p);
  } else if (head == "simultaneous") {
    auto p =
        std::make_unique<SimultaneousProtocol>(read_simultaneous_protocol(in));
    out.simultaneous = p.get();
    out.protocol = std::move(p);
  } else {
    throw UsageError("'" + path +
                     "' is neither a tree nor a simultaneous protocol file");
  }
  return out;
}

// A noiseless tree is moved onto the lift channel; a BSC tree must already
// be on it.
void target_lift_channel(TreeProtocol& tree, double epsilon, std::ostream& note) {
  const ChannelSpec want = ChannelSpec::bsc_with_advantage(lift_crossover(epsilon));
  const ChannelSpec& have = tree.channel();
  if (have.kind == ChannelKind::kNoiseless) {
    tree.set_channel(want);
    note << "# protocol channel set to " << describe(want) << "\n";
  } else if (std::abs(have.advantage() - want.advantage()) > 1e-12) {
    throw UsageError("protocol channel " + describe(have) +
                     " does not match the lift channel " + describe(want) +
                     " at this epsilon");
  }
}

const char* key_names = "view|answer|both";

OutcomeKey parse_key(const std::string& text) {
  if (text == "view") return OutcomeKey::kView;
  if (text == "answer") return OutcomeKey::kAnswer;
  if (text == "both") return OutcomeKey::kViewAndAnswer;
  throw UsageError("unknown key '" + text + "' (" + key_names + ")");
}

// -------------------------------------------------------------- experiments

struct ExperimentFlags {
  std::string config_path;
  std::optional<std::string> problem;
  std::optional<std::string> solver;
  std::optional<std::uint32_t> branching, num_layers, k, l;
  std::optional<std::string> epsilon;
  std::optional<std::uint32_t> group;
  std::optional<double> threshold;
  std::optional<std::uint32_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> gamma, eta;
  bool auto_size = false;
  bool serial = false;
  bool timing = false;
  std::string format;
  std::string out;
};

void add_experiment_flags(CLI::App* app, ExperimentFlags& f,
                          const std::string& default_format) {
  f.format = default_format;
  app->add_option("--config", f.config_path, "JSON config file; flags override it");
  app->add_option("--problem", f.problem, "hl | pc");
  app->add_option("--solver", f.solver, "hlsolver | pcsolver | hl-baseline");
  app->add_option("--B", f.branching, "HL branching factor");
  app->add_option("--L", f.num_layers, "HL number of layers");
  app->add_option("--k", f.k, "PC pointer hops");
  app->add_option("--l", f.l, "PC pointer range");
  app->add_option("--eps,--epsilon", f.epsilon, "privacy budget (number or ln<x>)");
  app->add_option("--group,--n,--m", f.group, "users per query");
  app->add_option("--threshold", f.threshold, "decision threshold (solver default if unset)");
  app->add_option("--trials", f.trials, "number of seeded trials");
  app->add_option("--seed", f.seed, "master seed (required here or in --config)");
  app->add_option("--gamma", f.gamma, "error budget");
  app->add_option("--eta", f.eta, "slack");
  app->add_flag("--auto-size", f.auto_size,
                "size the group from the solver's sample bound");
  app->add_flag("--serial", f.serial, "run trials on the serial reference path");
  app->add_flag("--timing", f.timing, "include wall time in the output");
  app->add_option("--format", f.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", f.out, "output path (default stdout)");
}

ExperimentConfig build_config(const ExperimentFlags& f) {
  ExperimentConfig cfg;
  bool seeded = f.seed.has_value();
  bool solver_given = f.solver.has_value();
  if (!f.config_path.empty()) {
    const std::string text = read_file(f.config_path);
    cfg = config_from_json(text);
    const auto j = nlohmann::json::parse(text, nullptr, false);
    seeded = seeded || (j.is_object() && j.contains("seed"));
    solver_given = solver_given || (j.is_object() && j.contains("solver"));
  }
  try {
    if (f.problem) cfg.problem = parse_problem(*f.problem);
    if (f.solver) cfg.solver = parse_solver(*f.solver);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!solver_given) {
    cfg.solver = cfg.problem == ProblemKind::kPointerChasing
                     ? SolverKind::kPCSolver
                     : SolverKind::kHLSolver;
  }
  if (f.branching) cfg.branching = *f.branching;
  if (f.num_layers) cfg.num_layers = *f.num_layers;
  if (f.k) cfg.k = *f.k;
  if (f.l) cfg.l = *f.l;
  if (f.epsilon) cfg.epsilon = parse_epsilon(*f.epsilon);
  if (f.group) cfg.group = *f.group;
  if (f.threshold) cfg.threshold = *f.threshold;
  if (f.trials) cfg.trials = *f.trials;
  if (f.seed) cfg.seed = *f.seed;
  if (f.gamma) cfg.gamma_target = *f.gamma;
  if (f.eta) cfg.eta = *f.eta;
  if (!seeded) {
    throw UsageError("--seed is required (there is no clock-based seeding)");
  }
  if (f.auto_size) {
    const std::uint64_t g =
        cfg.problem == ProblemKind::kPointerChasing
            ? pc_group_bound(cfg.epsilon, cfg.k, cfg.l, 1.0 / 6.0)
            : hl_sample_bound(cfg.epsilon, cfg.branching, 0.1);
    if (g > 0xffffffffULL) throw UsageError("sample bound overflows the group size");
    cfg.group = static_cast<std::uint32_t>(g);
  }
  cfg.parallel = !f.serial;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

int cmd_run(const ExperimentFlags& f) {
  const ExperimentConfig cfg = build_config(f);
  const ExperimentResult r =
      f.serial ? run_experiment_serial(cfg) : run_experiment(cfg);
  Sink sink(f.out);
  if (f.format == "csv") {
    write_csv_header(sink.stream(), f.timing);
    write_csv_row(sink.stream(), cfg, r, f.timing);
  } else {
    sink.stream() << result_json(cfg, r, f.timing) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const ExperimentFlags& f, const std::string& axis_name,
              const std::vector<double>& values) {
  const ExperimentConfig cfg = build_config(f);
  SweepAxis axis;
  try {
    axis = parse_sweep_axis(axis_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<SweepRow> rows = sweep(cfg, axis, values);
  Sink sink(f.out);
  if (f.format == "csv") {
    write_sweep_csv(sink.stream(), rows, axis, f.timing);
  } else {
    sink.stream() << sweep_json(rows, axis, f.timing) << "\n";
  }
  for (const SweepRow& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "warning: " << to_string(axis) << "=" << row.value << ": "
                << row.error << "\n";
    }
  }
  return kExitOk;
}

int cmd_audit(const ExperimentFlags& f, std::uint32_t trial,
              const std::string& transcript_path,
              const std::string& instance_path) {
  ExperimentConfig cfg = build_config(f);
  if (trial >= cfg.trials) cfg.trials = trial + 1;
  const TrialTrace trace = trace_trial(cfg, trial);
  Sink sink(f.out);
  std::ostream& out = sink.stream();
  if (!transcript_path.empty()) {
    Sink t(transcript_path);
    write_transcript(t.stream(), trace.execution.transcript,
                     trace.execution.query_log);
  }
  if (!instance_path.empty()) {
    Sink inst(instance_path);
    std::visit([&](const auto& i) { write_instance(inst.stream(), i); },
               trace.instance);
  }
  const AuditReport report = audit_transcript(
      trace.execution.transcript, trace.population, trace.execution.query_log);
  out << "# trial=" << trial << " answer=" << describe(trace.execution.answer)
      << " success=" << (trace.success ? 1 : 0) << " users="
      << sample_complexity(trace.execution.transcript)
      << " rounds=" << round_complexity(trace.execution.transcript) << "\n";
  out << "# max_log_ratio=" << fmt17(report.max_log_ratio())
      << " epsilon=" << fmt17(cfg.epsilon) << " status="
      << (report.max_log_ratio() <= cfg.epsilon + 1e-9 ? "pass" : "fail") << "\n";
  write_audit_report(out, report, cfg.epsilon);
  return kExitOk;
}

// ------------------------------------------------------------ gen-instance

// One leaf that follows f at layer a and g at layer b (child 0 elsewhere).
LeafPath example_leaf(const HLInstance& inst) {
  LeafPath leaf;
  for (std::uint32_t layer = 0; layer < inst.num_layers; ++layer) {
    std::uint32_t c = 0;
    if (layer == inst.a) c = inst.f->child(leaf.path, inst.branching);
    if (layer == inst.b) c = inst.g->child(leaf.path, inst.branching);
    leaf.path.push_back(c);
  }
  return leaf;
}

int cmd_gen_instance(const std::string& problem, std::uint32_t branching,
                     std::uint32_t num_layers, std::uint32_t k, std::uint32_t l,
                     std::uint64_t seed, const std::string& out_path) {
  Sink sink(out_path);
  std::ostringstream oracle;
  try {
    if (problem == "pc") {
      const PCInstance inst = gen_pc_instance(k, l, seed);
      if (!pc_recommended_regime(k, l)) {
        std::cerr << "warning: k=" << k << " l=" << l
                  << " is outside the regime k < l / log2(l)\n";
      }
      write_instance(sink.stream(), inst);
      oracle << "# oracle chase=" << chase_oracle(inst) << "\n";
    } else {
      const HLInstance inst = gen_hl_instance(branching, num_layers, seed);
      write_instance(sink.stream(), inst);
      const LeafPath leaf = example_leaf(inst);
      oracle << "# oracle leaf=";
      for (std::size_t i = 0; i < leaf.path.size(); ++i) {
        oracle << (i ? "." : "") << leaf.path[i];
      }
      oracle << " consistent=" << (hl_consistent(leaf, inst) ? 1 : 0) << "\n";
      try {
        oracle << "# oracle consistent_leaves=" << hl_count_consistent(inst)
               << "\n";
      } catch (const SizeGuardError&) {
        oracle << "# oracle consistent_leaves: too many leaves to enumerate\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  sink.stream() << oracle.str();
  if (sink.to_file()) std::cout << oracle.str();
  return kExitOk;
}

// ------------------------------------------------------------------ reduce

const Datum& input_of(Side side, int bit) {
  static const Datum inputs[2][2] = {
      {bit_input(Side::kAlice, 0), bit_input(Side::kAlice, 1)},
      {bit_input(Side::kBob, 0), bit_input(Side::kBob, 1)}};
  return inputs[side == Side::kAlice ? 0 : 1][bit];
}

int cmd_reduce_lift(const std::string& eps_text, const std::string& path,
                    bool check, const std::string& out_path) {
  const double eps = parse_epsilon(eps_text);
  Sink sink(out_path);
  std::ostream& out = sink.stream();
  LoadedProtocol loaded = load_protocol(path);
  if (!loaded.tree) throw UsageError("lift expects a tree protocol");
  TreeProtocol& tree = *loaded.tree;
  if (!tree.deterministic()) {
    throw UsageError("lift needs a deterministic protocol (p0, p1 in {0, 1})");
  }
  target_lift_channel(tree, eps, out);
  auto driver = lift_two_party_to_ldp(tree, eps);
  out << "lift_crossover " << fmt17(lift_crossover(eps)) << "\n";
  out << "flip " << fmt17(tree.channel().flip_probability()) << "\n";
  out << "driver " << driver->name() << " epsilon=" << fmt17(eps) << "\n";
  // One fresh user per protocol bit; the bit at history h is asked of the
  // |h|-th user.
  for (std::uint32_t len = 0; len < tree.depth(); ++len) {
    for (std::uint64_t v = 0; v < (1ULL << len); ++v) {
      std::string h;
      for (std::uint32_t i = 0; i < len; ++i) {
        h.push_back(((v >> (len - 1 - i)) & 1) ? '1' : '0');
      }
      const auto node = tree.node(h);
      if (!node) continue;
      const TreeNode n = *node;
      LiftedBitRandomizer r(
          eps, n.sender,
          [n](const Datum& d) {
            return (input_bit(d) ? n.p1 : n.p0) > 0.5 ? 1 : 0;
          },
          "");
      out << "bit " << (h.empty() ? "-" : h) << " user=" << len << " "
          << r.descriptor() << "\n";
    }
  }
  if (check) {
    EnumerateOptions opt;
    opt.key = OutcomeKey::kView;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const auto two = enumerate_transcript_distribution(
            tree, input_of(Side::kAlice, x), input_of(Side::kBob, y), opt);
        const auto ldp = enumerate_ldp_distribution(
            *driver, make_scalar(x), make_scalar(y), InteractivityMode::kSequential,
            opt);
        out << "tv x=" << x << " y=" << y << " " << fmt17(tv_distance(two, ldp))
            << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_reduce_lower(const std::string& eps_text,
                     const std::vector<std::string>& descriptors,
                     bool single_round, bool check, const std::string& out_path) {
  const double eps = parse_epsilon(eps_text);
  if (descriptors.empty() || descriptors.size() > 16) {
    throw UsageError("lower needs 1..16 --randomizer users");
  }
  std::vector<std::vector<RandomizerPtr>> choices;
  std::vector<RandomizerPtr> users;
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    RandomizerPtr r = parse_randomizer(descriptors[i]);
    if (r->epsilon() > eps + 1e-12) {
      throw UsageError("randomizer '" + descriptors[i] + "' exceeds epsilon");
    }
    users.push_back(r);
    choices.emplace_back(single_round ? 1 : (std::size_t{1} << i), r);
  }
  OneBitLdpProtocol q{
      std::make_shared<AdaptiveOneBitDriver>(std::move(choices), single_round),
      bit_universe(), eps};
  const auto lowered =
      lower_multi_to_two_party(q, static_cast<std::uint32_t>(users.size()));
  Sink sink(out_path);
  std::ostream& out = sink.stream();
  const double adv = lower_crossover(eps);
  out << "lower_crossover " << fmt17(adv) << "\n";
  out << "flip " << fmt17(lowered->channel().flip_probability()) << "\n";
  out << "user_cap " << users.size() << "\n";
  for (std::size_t i = 0; i < users.size(); ++i) {
    const UserPlan plan = plan_user(*users[i], q.universe);
    out << "user " << i << " case=" << plan.plan_case
        << " coverage=" << fmt17(plan.coverage)
        << " skip_bit=" << int{plan.skip_bit} << " p_min=" << fmt17(plan.p_min)
        << " p_max=" << fmt17(plan.p_max);
    for (const Datum& d : q.universe) {
      out << " send[" << describe(d) << "]="
          << fmt17(planned_send_probability(plan, *users[i], d, adv));
    }
    out << "\n";
  }
  if (check) {
    EnumerateOptions opt;
    opt.key = OutcomeKey::kViewAndAnswer;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const auto ldp = enumerate_ldp_distribution(
            *q.driver, make_scalar(x), make_scalar(y),
            InteractivityMode::kSequential, opt);
        const auto two = enumerate_transcript_distribution(
            *lowered, input_of(Side::kAlice, x), input_of(Side::kBob, y), opt);
        out << "tv x=" << x << " y=" << y << " " << fmt17(tv_distance(ldp, two))
            << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_reduce_amplify(std::optional<double> flip,
                       std::optional<std::string> eps_text, std::uint32_t m,
                       std::uint64_t mc, std::optional<std::uint64_t> seed,
                       const std::string& out_path) {
  if (flip.has_value() == eps_text.has_value()) {
    throw UsageError("give exactly one of --flip and --eps");
  }
  ChannelSpec inner;
  try {
    inner = flip ? ChannelSpec::bsc(*flip)
                 : ChannelSpec::bsc_with_advantage(
                       lower_crossover(parse_epsilon(*eps_text)));
    const MajorityChannel channel(inner, m);
    Sink sink(out_path);
    std::ostream& out = sink.stream();
    out << "inner_flip " << fmt17(inner.flip_probability()) << "\n";
    out << "repetitions " << m << "\n";
    out << "effective_flip " << fmt17(channel.effective().flip_probability())
        << "\n";
    out << "effective_advantage " << fmt17(channel.effective().advantage())
        << "\n";
    if (mc > 0) {
      if (!seed) throw UsageError("--mc needs --seed");
      std::mt19937_64 rng(derive_seed(*seed, kPublicStream));
      std::uint64_t flips = 0;
      for (std::uint64_t i = 0; i < mc; ++i) {
        const std::uint8_t bit = static_cast<std::uint8_t>(i & 1);
        flips += channel.transmit(bit, rng).received != bit;
      }
      const double p = channel.effective().flip_probability();
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(mc));
      const double rate = static_cast<double>(flips) / static_cast<double>(mc);
      out << "monte_carlo_flip " << fmt17(rate) << " transmissions=" << mc
          << " sigma=" << fmt17(sigma) << "\n";
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

// "B1 | A1 A2 | B2 B3 | ..." from the canonical order A1 B1 A2 B2 ...
std::string schedule_string(const std::vector<std::uint32_t>& order) {
  std::string s;
  int last = -1;
  for (std::uint32_t c : order) {
    const int side = static_cast<int>(c % 2);
    if (last >= 0) s += side == last ? " " : " | ";
    s += (side == 0 ? "A" : "B") + std::to_string(c / 2 + 1);
    last = side;
  }
  return s;
}

int cmd_reduce_rounds(const std::string& path, bool check,
                      const std::string& out_path) {
  LoadedProtocol loaded = load_protocol(path);
  if (!loaded.simultaneous) {
    throw UsageError("rounds expects a simultaneous protocol");
  }
  auto alt = simultaneous_to_alternating(*loaded.simultaneous);
  const auto& wrapped = dynamic_cast<const AlternatingFromSimultaneous&>(*alt);
  Sink sink(out_path);
  std::ostream& out = sink.stream();
  out << "rounds " << loaded.simultaneous->rounds() << "\n";
  out << "turns " << wrapped.turns() << "\n";
  out << "schedule " << schedule_string(wrapped.order()) << "\n";
  if (check) {
    EnumerateOptions opt;
    opt.key = OutcomeKey::kViewAndAnswer;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const Datum& a = input_of(Side::kAlice, x);
        const Datum& b = input_of(Side::kBob, y);
        const auto original =
            enumerate_transcript_distribution(*loaded.simultaneous, a, b, opt);
        const auto moved = enumerate_transcript_distribution(*alt, a, b, opt);
        out << "tv x=" << x << " y=" << y << " "
            << fmt17(tv_distance(original, moved)) << "\n";
      }
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& path, std::optional<int> alice,
                  std::optional<int> bob, const std::string& key_text,
                  std::optional<std::string> lift_eps,
                  const std::string& out_path) {
  EnumerateOptions opt;
  opt.key = parse_key(key_text);
  LoadedProtocol loaded = load_protocol(path);
  Sink sink(out_path);
  std::ostream& out = sink.stream();
  std::unique_ptr<LiftedDriver> lifted;
  if (lift_eps) {
    if (!loaded.tree) throw UsageError("--lift expects a tree protocol");
    const double eps = parse_epsilon(*lift_eps);
    target_lift_channel(*loaded.tree, eps, out);
    lifted = lift_two_party_to_ldp(*loaded.tree, eps);
  }
  for (int x = 0; x < 2; ++x) {
    if (alice && *alice != x) continue;
    for (int y = 0; y < 2; ++y) {
      if (bob && *bob != y) continue;
      const TranscriptDistribution d =
          lifted ? enumerate_ldp_distribution(*lifted, make_scalar(x),
                                              make_scalar(y),
                                              InteractivityMode::kSequential, opt)
                 : enumerate_transcript_distribution(
                       *loaded.protocol, input_of(Side::kAlice, x),
                       input_of(Side::kBob, y), opt);
      out << "# x=" << x << " y=" << y << " outcomes=" << d.size()
          << " total=" << fmt17(d.total()) << "\n";
      write_distribution(out, d);
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- acceptance

int cmd_acceptance(const std::string& suite, std::uint64_t seed,
                   const std::vector<int>& only) {
  if (suite != "primary") throw UsageError("unknown suite '" + suite + "'");
  AcceptanceOptions options;
  options.seed = seed;
  options.only = only;
  options.on_result = [](const CriterionResult& r) {
    std::cout << format_criterion(r) << std::endl;
  };
  bool all = true;
  for (const CriterionResult& r : run_acceptance_suite(options)) all = all && r.pass;
  std::cout << (all ? "acceptance: all criteria passed"
                    : "acceptance: FAILED")
            << std::endl;
  return all ? kExitOk : kExitAcceptanceFailure;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"ldpsim: interactive local differential privacy simulator"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // gen-instance
  auto* gen = app.add_subcommand("gen-instance", "generate a seeded instance");
  std::string gen_problem;
  std::uint32_t gen_b = 4, gen_L = 9, gen_k = 3, gen_l = 16;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("problem", gen_problem, "hl | pc")
      ->required()
      ->check(CLI::IsMember({"hl", "pc"}));
  gen->add_option("--B", gen_b, "HL branching factor");
  gen->add_option("--L", gen_L, "HL number of layers");
  gen->add_option("--k", gen_k, "PC pointer hops");
  gen->add_option("--l", gen_l, "PC pointer range");
  gen->add_option("--seed", gen_seed, "instance seed")->required();
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // run / sweep / audit
  ExperimentFlags run_flags, sweep_flags, audit_flags;
  auto* run = app.add_subcommand("run", "run a seeded Monte Carlo experiment");
  add_experiment_flags(run, run_flags, "json");
  auto* sw = app.add_subcommand("sweep", "run one experiment per axis value");
  add_experiment_flags(sw, sweep_flags, "csv");
  std::string sweep_axis;
  std::vector<double> sweep_values;
  sw->add_option("--axis", sweep_axis, "n | m | group | epsilon | B | L | k | l")
      ->required();
  sw->add_option("--values", sweep_values, "comma-separated values")
      ->delimiter(',');
  auto* audit = app.add_subcommand(
      "audit", "replay one trial and audit every user's privacy loss");
  add_experiment_flags(audit, audit_flags, "json");
  std::uint32_t audit_trial = 0;
  std::string audit_transcript, audit_instance;
  audit->add_option("--trial", audit_trial, "trial index to replay");
  audit->add_option("--transcript", audit_transcript,
                    "also write the transcript here");
  audit->add_option("--instance", audit_instance, "also write the instance here");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "two-party/LDP reductions");
  reduce->require_subcommand(1);
  std::string red_out;
  auto* lift = reduce->add_subcommand("lift", "lift a two-party tree protocol");
  std::string lift_eps, lift_protocol;
  bool lift_check = false;
  lift->add_option("--eps", lift_eps, "privacy budget (number or ln<x>)")
      ->required();
  lift->add_option("--protocol", lift_protocol, "tree protocol file")->required();
  lift->add_flag("--check", lift_check, "compare exact distributions");
  lift->add_option("--out", red_out, "output path (default stdout)");
  auto* lower = reduce->add_subcommand(
      "lower", "simulate a one-bit sequential LDP protocol over a BSC");
  std::string lower_eps;
  std::vector<std::string> lower_randomizers;
  bool lower_single = false, lower_check = false;
  lower->add_option("--eps", lower_eps, "privacy budget")->required();
  lower->add_option("--randomizer", lower_randomizers,
                    "one user's randomizer descriptor, repeatable")
      ->required();
  lower->add_flag("--single-round", lower_single, "all users in one round");
  lower->add_flag("--check", lower_check, "compare exact distributions");
  lower->add_option("--out", red_out, "output path (default stdout)");
  auto* amplify = reduce->add_subcommand("amplify", "majority-vote amplification");
  std::optional<double> amp_flip;
  std::optional<std::string> amp_eps;
  std::uint32_t amp_m = 3;
  std::uint64_t amp_mc = 0;
  std::optional<std::uint64_t> amp_seed;
  amplify->add_option("--flip", amp_flip, "inner flip probability");
  amplify->add_option("--eps", amp_eps, "use the lower-reduction channel at eps");
  amplify->add_option("--m", amp_m, "odd number of repetitions");
  amplify->add_option("--mc", amp_mc, "Monte Carlo transmissions");
  amplify->add_option("--seed", amp_seed, "seed for --mc");
  amplify->add_option("--out", red_out, "output path (default stdout)");
  auto* rounds = reduce->add_subcommand(
      "rounds", "turn a simultaneous protocol into an alternating one");
  std::string rounds_protocol;
  bool rounds_check = false;
  rounds->add_option("--protocol", rounds_protocol, "simultaneous protocol file")
      ->required();
  rounds->add_flag("--check", rounds_check, "compare exact distributions");
  rounds->add_option("--out", red_out, "output path (default stdout)");

  // enumerate
  auto* en = app.add_subcommand("enumerate",
                                "exact outcome distribution of a protocol");
  std::string en_protocol, en_key = "view", en_out;
  std::optional<int> en_alice, en_bob;
  std::optional<std::string> en_lift;
  en->add_option("--protocol", en_protocol, "tree or simultaneous protocol file")
      ->required();
  en->add_option("--alice", en_alice, "Alice's input bit (default both)")
      ->check(CLI::Range(0, 1));
  en->add_option("--bob", en_bob, "Bob's input bit (default both)")
      ->check(CLI::Range(0, 1));
  en->add_option("--key", en_key, key_names);
  en->add_option("--lift", en_lift, "enumerate the lifted LDP driver at this eps");
  en->add_option("--out", en_out, "output path (default stdout)");

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
  std::string acc_suite = "primary";
  std::uint64_t acc_seed = AcceptanceOptions{}.seed;
  std::vector<int> acc_only;
  acc->add_option("--suite", acc_suite, "suite name")->check(
      CLI::IsMember({"primary"}));
  acc->add_option("--seed", acc_seed, "master seed");
  acc->add_option("--only", acc_only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      return cmd_gen_instance(gen_problem, gen_b, gen_L, gen_k, gen_l, gen_seed,
                              gen_out);
    }
    if (*run) return cmd_run(run_flags);
    if (*sw) return cmd_sweep(sweep_flags, sweep_axis, sweep_values);
    if (*audit) {
      return cmd_audit(audit_flags, audit_trial, audit_transcript,
                       audit_instance);
    }
    if (*lift) return cmd_reduce_lift(lift_eps, lift_protocol, lift_check, red_out);
    if (*lower) {
      return cmd_reduce_lower(lower_eps, lower_randomizers, lower_single,
                              lower_check, red_out);
    }
    if (*amplify) {
      return cmd_reduce_amplify(amp_flip, amp_eps, amp_m, amp_mc, amp_seed,
                                red_out);
    }
    if (*rounds) return cmd_reduce_rounds(rounds_protocol, rounds_check, red_out);
    if (*en) {
      return cmd_enumerate(en_protocol, en_alice, en_bob, en_key, en_lift,
                           en_out);
    }
    if (*acc) return cmd_acceptance(acc_suite, acc_seed, acc_only);
  } catch (const std::exception& e) {
    // Bad flags, files, or configs all surface here.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}

}  // namespace
}  // namespace ldpsim

int main(int argc, char** argv) { return ldpsim::run_cli(argc, argv); }
