#include "ldpsim/harness/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "ldpsim/core/kernels.hpp"
#include "ldpsim/core/rng.hpp"
#include "ldpsim/harness/experiment.hpp"
#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"
#include "ldpsim/solvers/sizing.hpp"
#include "ldpsim/twoparty/channel.hpp"
#include "ldpsim/twoparty/enumerate.hpp"
#include "ldpsim/twoparty/families.hpp"
#include "ldpsim/twoparty/lift.hpp"
#include "ldpsim/twoparty/lower.hpp"
#include "ldpsim/twoparty/rounds.hpp"

namespace ldpsim {
namespace {

constexpr double kTvTolerance = 1e-12;
constexpr double kAuditSlack = 1e-9;

struct Check {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

ExperimentConfig hl_config(std::uint32_t n, std::uint32_t trials,
                           std::uint64_t seed) {
  ExperimentConfig c;
  c.problem = ProblemKind::kHiddenLayers;
  c.solver = SolverKind::kHLSolver;
  c.branching = 4;
  c.num_layers = 9;
  c.epsilon = 1.0;
  c.group = n;
  c.trials = trials;
  c.seed = seed;
  return c;
}

ExperimentConfig pc_config(std::uint32_t trials, std::uint64_t seed) {
  ExperimentConfig c;
  c.problem = ProblemKind::kPointerChasing;
  c.solver = SolverKind::kPCSolver;
  c.k = 3;
  c.l = 16;
  c.epsilon = 1.0;
  c.group = static_cast<std::uint32_t>(pc_group_bound(1.0, 3, 16, 1.0 / 6.0));
  c.trials = trials;
  c.seed = seed;
  return c;
}

std::string summary(const ExperimentResult& r) {
  return fmt("rate=%u/%u=%.4f ci=[%.4f,%.4f] errors=%u", r.success_count,
             r.trials, r.success_rate, r.ci_lo, r.ci_hi,
             r.engine_errors + r.decode_failures);
}

Check privacy_exactness(std::uint64_t seed) {
  const ExperimentResult hl = run_experiment(hl_config(500, 50, seed));
  const ExperimentResult pc = run_experiment(pc_config(50, seed + 1));
  const double eps = 1.0;
  const bool bounded = hl.max_user_audit <= eps + kAuditSlack &&
                       pc.max_user_audit <= eps + kAuditSlack;
  const bool tight = std::fabs(hl.max_user_audit - eps) <= kAuditSlack;
  const bool clean = hl.engine_errors == 0 && pc.engine_errors == 0;
  return {bounded && tight && clean,
          fmt("hl max audit=%.12f pc max audit=%.12f (eps=1, m=%u) "
              "engine errors=%u/%u",
              hl.max_user_audit, pc.max_user_audit, pc_config(1, 0).group,
              hl.engine_errors, pc.engine_errors)};
}

Check pc_accuracy(std::uint64_t seed) {
  const ExperimentConfig c = pc_config(300, seed);
  const ExperimentResult r = run_experiment(c);
  return {r.success_rate >= 5.0 / 6.0 && r.ci_lo >= 0.75,
          fmt("m=%u ", c.group) + summary(r) + " need rate>=5/6, lo>=0.75"};
}

Check hl_accuracy(std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(hl_sample_bound(1.0, 4, 0.1));
  const ExperimentResult r = run_experiment(hl_config(n, 200, seed));
  return {r.success_rate >= 0.9 && r.ci_lo >= 0.8,
          fmt("n=%u ", n) + summary(r) + " need rate>=0.9, lo>=0.8"};
}

Check estimator_concentration(std::uint64_t seed) {
  const std::uint32_t n = 400;
  const double eps = 1.0;
  const double radius = debias_radius(eps, n, 0.1);
  const std::uint32_t trials = 2000;
  bool pass = true;
  std::string detail = fmt("radius=%.5f", radius);
  std::vector<UserId> users(n);
  for (UserId i = 0; i < n; ++i) users[i] = i;
  std::vector<double> p_one(n);
  std::vector<std::uint8_t> out(n);
  for (double y : {0.0, 0.3, 1.0}) {
    const auto ones = static_cast<std::uint32_t>(std::lround(y * n));
    for (std::uint32_t i = 0; i < n; ++i) p_one[i] = rr_param(i < ones, eps);
    std::uint32_t hits = 0;
    for (std::uint32_t t = 0; t < trials; ++t) {
      const std::uint64_t s =
          derive_seed(derive_seed(seed, kTrialStream, t), kUserStream,
                      static_cast<std::uint64_t>(y * 10));
      const std::uint64_t sum = kernels::respond(kernels::Policy::kSerial,
                                                 users, p_one, s, 0, out);
      if (std::fabs(y - debias(sum, n, eps)) <= radius) ++hits;
    }
    const double freq = static_cast<double>(hits) / trials;
    pass = pass && freq >= 0.9;
    detail += fmt(" y=%.1f:%.4f", y, freq);
  }
  return {pass, detail + " need >=0.9 each"};
}

Check lift_equivalence(std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t protocols = 0, comparisons = 0, sampled = 0;
  EnumerateOptions opt;
  opt.key = OutcomeKey::kViewAndAnswer;
  const PayloadPtr bits[2] = {make_scalar(0), make_scalar(1)};
  for (double eps : {std::log(2.0), std::log(3.0)}) {
    const ChannelSpec channel =
        ChannelSpec::bsc_with_advantage(lift_crossover(eps));
    auto compare = [&](const TreeProtocol& p) {
      auto lifted = lift_two_party_to_ldp(p, eps);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const auto two = enumerate_transcript_distribution(
              p, Datum{Side::kAlice, bits[x]}, Datum{Side::kBob, bits[y]},
              opt);
          const auto multi = enumerate_ldp_distribution(
              *lifted, bits[x], bits[y], InteractivityMode::kSequential, opt);
          worst = std::max(worst, tv_distance(two, multi));
          ++comparisons;
        }
      }
    };
    for_each_lift_protocol(channel, [&](const TreeProtocol& p) {
      ++protocols;
      compare(p);
    });
    // Fully history-dependent depth-3 trees, sampled.
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10000; ++i) {
      ++sampled;
      compare(random_tree_protocol(3, channel, rng));
    }
  }
  return {worst <= kTvTolerance,
          fmt("%llu structured + %llu sampled protocols per eps, 4 inputs, "
              "2 eps, %llu comparisons, max TV=%.3g",
              static_cast<unsigned long long>(protocols / 2),
              static_cast<unsigned long long>(sampled / 2),
              static_cast<unsigned long long>(comparisons), worst)};
}

Check lower_equivalence(std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t fixtures = 0;
  bool saw_case[3] = {false, false, false};
  EnumerateOptions opt;
  opt.key = OutcomeKey::kViewAndAnswer;
  const PayloadPtr bits[2] = {make_scalar(0), make_scalar(1)};
  std::mt19937_64 rng(seed);
  for (double eps : {std::log(2.0), std::log(3.0)}) {
    for (const OneBitLdpProtocol& q : lower_fixtures(eps)) {
      ++fixtures;
      auto lowered = lower_multi_to_two_party(q, 2);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const Datum a{Side::kAlice, bits[x]}, b{Side::kBob, bits[y]};
          const auto reference = enumerate_ldp_distribution(
              *q.driver, bits[x], bits[y], InteractivityMode::kSequential, opt);
          const auto produced =
              enumerate_transcript_distribution(*lowered, a, b, opt);
          worst = std::max(worst, tv_distance(reference, produced));
          LoweredProtocol run = *lowered;
          run_two_party(run, a, b, rng);
          for (const UserPlan& plan : run.plans()) saw_case[plan.plan_case] = true;
        }
      }
    }
  }
  return {worst <= kTvTolerance && saw_case[1] && saw_case[2],
          fmt("%llu fixtures x 4 inputs, max TV=%.3g, case1=%s case2=%s",
              static_cast<unsigned long long>(fixtures), worst,
              saw_case[1] ? "yes" : "no", saw_case[2] ? "yes" : "no")};
}

Check round_transform(std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t protocols = 0, bad_schedule = 0;
  EnumerateOptions opt;
  opt.key = OutcomeKey::kViewAndAnswer;
  const Datum inputs[2][2] = {{bit_input(Side::kAlice, 0), bit_input(Side::kAlice, 1)},
                              {bit_input(Side::kBob, 0), bit_input(Side::kBob, 1)}};
  auto check = [&](const SimultaneousProtocol& p) {
    ++protocols;
    auto alt = simultaneous_to_alternating(p);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const auto original =
            enumerate_transcript_distribution(p, inputs[0][x], inputs[1][y], opt);
        TranscriptDistribution moved;
        visit_two_party_paths(
            *alt, inputs[0][x], inputs[1][y], [&](const TwoPartyPath& path) {
              if (count_alternating_rounds(path.senders) != 3 ||
                  path.senders.empty() || path.senders.front() != Side::kBob) {
                ++bad_schedule;
              }
              moved.add(outcome_key(opt.key, path.view, path.answer),
                        path.probability);
            });
        worst = std::max(worst, tv_distance(original, moved));
      }
    }
  };
  for_each_simultaneous_protocol(check);
  const std::uint64_t deterministic = protocols;
  // Randomized messages, over both channel kinds.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 512; ++i) {
    std::vector<SimultaneousProtocol::RoundTables> tables(2);
    for (int t = 0; t < 2; ++t) {
      for (auto& table : tables[t]) {
        table.resize(std::size_t{2} << (2 * t));
        for (double& v : table) v = unit(rng);
      }
    }
    check(SimultaneousProtocol(std::move(tables),
                               i % 2 ? ChannelSpec::bsc(0.125)
                                     : ChannelSpec::noiseless()));
  }
  return {worst <= kTvTolerance && bad_schedule == 0,
          fmt("%llu deterministic + %llu randomized protocols, max TV=%.3g, "
              "paths not 3 turns/Bob first=%llu",
              static_cast<unsigned long long>(deterministic),
              static_cast<unsigned long long>(protocols - deterministic), worst,
              static_cast<unsigned long long>(bad_schedule))};
}

Check channel_math(std::uint64_t seed) {
  const double lift = lift_crossover(std::log(3.0));
  const double lower = lower_crossover(std::log(3.0));
  const ChannelSpec maj = majority_amplify(ChannelSpec::bsc(0.25), 3);
  bool pass = lift == 0.125 && lower == 0.25 && maj.crossover == 10.0 / 64.0;
  std::string detail = fmt("lift(ln3)=%.17g lower(ln3)=%.17g maj=%.17g", lift,
                           lower, maj.crossover);
  std::mt19937_64 rng(seed);
  const int draws = 100000;
  auto mc = [&](const char* label, double flip, auto&& transmit) {
    int flips = 0;
    for (int i = 0; i < draws; ++i) {
      const std::uint8_t bit = i & 1;
      flips += transmit(bit) != bit;
    }
    const double rate = static_cast<double>(flips) / draws;
    const double sigma = std::sqrt(flip * (1 - flip) / draws);
    pass = pass && std::fabs(rate - flip) <= 3 * sigma;
    detail += fmt(" %s=%.5f(want %.5f)", label, rate, flip);
  };
  for (double flip : {0.375, 0.5 - lift, 0.5 - lower}) {
    const ChannelSpec spec = ChannelSpec::bsc(flip);
    mc("bsc", flip, [&](std::uint8_t b) { return bsc_transmit(b, spec, rng).received; });
  }
  const MajorityChannel channel(ChannelSpec::bsc(0.25), 3);
  mc("majority", 10.0 / 64.0,
     [&](std::uint8_t b) { return channel.transmit(b, rng).received; });
  return {pass, detail};
}

Check interactivity_gap(std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(hl_sample_bound(1.0, 4, 0.1));
  const ExperimentResult hl = run_experiment(hl_config(n, 50, seed));
  ExperimentConfig bc = hl_config(n, 50, seed);
  bc.solver = SolverKind::kHLBaseline;
  const ExperimentResult base = run_experiment(bc);
  const double factor = base.mean_sample_complexity / hl.mean_sample_complexity;
  const bool overlap = std::max(hl.ci_lo, base.ci_lo) <= std::min(hl.ci_hi, base.ci_hi);
  return {factor >= 8.0 && overlap && hl.engine_errors == 0 &&
              base.engine_errors == 0,
          fmt("group=%u hl samples=%.1f baseline samples=%.1f factor=%.2f "
              "(need >=8) hl %s | baseline %s",
              n, hl.mean_sample_complexity, base.mean_sample_complexity, factor,
              summary(hl).c_str(), summary(base).c_str())};
}

Check oracle_fixtures(std::uint64_t seed) {
  PCInstance fig;
  fig.k = 5;
  fig.l = 8;
  fig.a = {8, 6, 5, 1, 2, 4, 3, 7};
  fig.b = {1, 2, 4, 6, 7, 8, 3, 5};
  const std::uint32_t answer = chase_oracle(fig);
  bool pass = answer == 8;
  std::uint32_t shapes = 0, bad = 0;
  for (std::uint32_t b = 1; b <= 3; ++b) {
    for (std::uint32_t l = 2; l <= 6; ++l) {
      std::uint64_t want = 1;
      for (std::uint32_t i = 0; i + 2 < l; ++i) want *= b;
      for (std::uint64_t s = 0; s < 4; ++s) {
        ++shapes;
        if (hl_count_consistent(gen_hl_instance(b, l, derive_seed(seed, kInstanceStream, s))) != want) ++bad;
      }
    }
  }
  pass = pass && bad == 0;
  return {pass, fmt("eight-pointer chase=%u (want 8); %u instances with B<=3, "
                    "L<=6, %u count mismatches",
                    answer, shapes, bad)};
}

struct Spec {
  int id;
  const char* name;
  double limit;
};

constexpr Spec kSpecs[] = {
    {1, "privacy-exactness", 120},     {2, "pcsolver-accuracy", 300},
    {3, "hlsolver-accuracy", 300},     {4, "estimator-concentration", 60},
    {5, "lift-equivalence", 60},       {6, "lower-equivalence", 60},
    {7, "round-transform", 60},        {8, "channel-math", 60},
    {9, "interactivity-gap", 300},     {10, "oracle-fixtures", 60},
};

const Spec& spec_of(int id) {
  for (const Spec& s : kSpecs) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown acceptance criterion " +
                              std::to_string(id));
}

Check dispatch(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return privacy_exactness(seed);
    case 2: return pc_accuracy(seed);
    case 3: return hl_accuracy(seed);
    case 4: return estimator_concentration(seed);
    case 5: return lift_equivalence(seed);
    case 6: return lower_equivalence(seed);
    case 7: return round_transform(seed);
    case 8: return channel_math(seed);
    case 9: return interactivity_gap(seed);
    case 10: return oracle_fixtures(seed);
  }
  throw std::invalid_argument("unknown acceptance criterion");
}

}  // namespace

std::vector<int> acceptance_ids() {
  std::vector<int> ids;
  for (const Spec& s : kSpecs) ids.push_back(s.id);
  return ids;
}

std::string criterion_name(int id) { return spec_of(id).name; }

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const Spec& spec = spec_of(id);
  CriterionResult result;
  result.id = id;
  result.name = spec.name;
  result.limit_seconds = spec.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    Check c = dispatch(id, derive_seed(seed, kTrialStream, 1000 + id));
    result.pass = c.pass;
    result.detail = std::move(c.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  result.seconds = elapsed.count();
  if (result.seconds > result.limit_seconds) {
    result.pass = false;
    result.detail += " [over time limit]";
  }
  return result;
}

std::vector<CriterionResult> run_acceptance_suite(
    const AcceptanceOptions& options) {
  std::vector<int> ids = options.only.empty() ? acceptance_ids() : options.only;
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(run_criterion(id, options.seed));
    if (options.on_result) options.on_result(results.back());
  }
  return results;
}

std::string format_criterion(const CriterionResult& r) {
  return fmt("%s %2d %-24s %s  (%.1f s / %.0f s)", r.pass ? "PASS" : "FAIL",
             r.id, r.name.c_str(), r.detail.c_str(), r.seconds,
             r.limit_seconds);
}

}  // namespace ldpsim
