#include "ldpsim/twoparty/families.hpp"

#include <memory>

#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {
namespace {

TreeNode make_node(Side sender, int function) {
  return TreeNode{sender, kBitFunctions[function][0],
                  kBitFunctions[function][1]};
}

// Laws on the bit universe (A0, A1, B0, B1), each within a factor 2 of the
// others and so within any budget >= ln 2.
RandomizerPtr mixed_law(double epsilon, std::array<double, 4> law,
                        const std::string& name) {
  return std::make_shared<LawRandomizer>(
      epsilon,
      [law](const Datum& d) {
        const auto* s = d.payload_as<ScalarPayload>();
        if (s == nullptr) return 0.5;
        return law[2 * static_cast<std::size_t>(d.side) +
                   static_cast<std::size_t>(s->value() != 0)];
      },
      name);
}

}  // namespace

std::uint64_t lift_family_size() { return 649 + 8 * (1u << 14); }

void for_each_lift_protocol(const ChannelSpec& channel,
                            const std::function<void(const TreeProtocol&)>& fn) {
  // Depth <= 2: option 0 is "no node", options 1..8 pick (sender, function).
  auto apply = [](TreeProtocol& t, const std::string& h, int option) {
    if (option == 0) return;
    const int o = option - 1;
    t.set_node(h, make_node(o < 4 ? Side::kAlice : Side::kBob, o % 4));
  };
  {
    TreeProtocol empty(3, channel);
    fn(empty);
  }
  for (int root = 1; root <= 8; ++root) {
    for (int c0 = 0; c0 <= 8; ++c0) {
      for (int c1 = 0; c1 <= 8; ++c1) {
        TreeProtocol t(3, channel);
        apply(t, "", root);
        apply(t, "0", c0);
        apply(t, "1", c1);
        fn(t);
      }
    }
  }
  static const char* kHistories[7] = {"", "0", "1", "00", "01", "10", "11"};
  for (int schedule = 0; schedule < 8; ++schedule) {
    for (std::uint32_t code = 0; code < (1u << 14); ++code) {
      TreeProtocol t(3, channel);
      for (int i = 0; i < 7; ++i) {
        const int depth = i == 0 ? 0 : (i < 3 ? 1 : 2);
        const Side sender = ((schedule >> depth) & 1) ? Side::kBob : Side::kAlice;
        t.set_node(kHistories[i], make_node(sender, (code >> (2 * i)) & 3));
      }
      fn(t);
    }
  }
}

TreeProtocol random_tree_protocol(std::uint32_t depth, const ChannelSpec& channel,
                                  std::mt19937_64& rng,
                                  double leaf_probability) {
  TreeProtocol t(depth, channel);
  std::uniform_int_distribution<int> option(0, 7);
  std::bernoulli_distribution leaf(leaf_probability);
  std::vector<std::string> frontier = {""};
  while (!frontier.empty()) {
    const std::string h = frontier.back();
    frontier.pop_back();
    if (!h.empty() && leaf(rng)) continue;
    const int o = option(rng);
    t.set_node(h, make_node(o < 4 ? Side::kAlice : Side::kBob, o % 4));
    if (h.size() + 1 < depth) {
      frontier.push_back(h + "0");
      frontier.push_back(h + "1");
    }
  }
  return t;
}

std::uint64_t simultaneous_family_size() { return 4ULL * 4 * 256 * 256; }

void for_each_simultaneous_protocol(
    const std::function<void(const SimultaneousProtocol&)>& fn) {
  for (int a1 = 0; a1 < 4; ++a1) {
    for (int b1 = 0; b1 < 4; ++b1) {
      for (int a2 = 0; a2 < 256; ++a2) {
        for (int b2 = 0; b2 < 256; ++b2) {
          std::vector<SimultaneousProtocol::RoundTables> tables(2);
          tables[0][0] = {kBitFunctions[a1][0], kBitFunctions[a1][1]};
          tables[0][1] = {kBitFunctions[b1][0], kBitFunctions[b1][1]};
          tables[1][0].resize(8);
          tables[1][1].resize(8);
          for (int i = 0; i < 8; ++i) {
            tables[1][0][i] = (a2 >> i) & 1;
            tables[1][1][i] = (b2 >> i) & 1;
          }
          fn(SimultaneousProtocol(std::move(tables)));
        }
      }
    }
  }
}

std::vector<OneBitLdpProtocol> lower_fixtures(double epsilon) {
  const std::vector<RandomizerPtr> users = {
      std::make_shared<RRQuery>(epsilon,
                                std::make_shared<ScalarEqualsPredicate>(1)),
      std::make_shared<RRQuery>(epsilon,
                                std::make_shared<SidePredicate>(Side::kAlice)),
      std::make_shared<ConstantRandomizer>(0.3, epsilon),
      std::make_shared<ConstantRandomizer>(0.7, epsilon),
      mixed_law(epsilon, {0.2, 0.3, 0.25, 0.35}, "law(0.2,0.3,0.25,0.35)"),
      mixed_law(epsilon, {0.6, 0.75, 0.7, 0.65}, "law(0.6,0.75,0.7,0.65)"),
  };
  std::vector<OneBitLdpProtocol> out;
  const std::vector<Datum> universe = bit_universe();
  auto add = [&](std::vector<std::vector<RandomizerPtr>> choices, bool single) {
    out.push_back(OneBitLdpProtocol{
        std::make_shared<AdaptiveOneBitDriver>(std::move(choices), single),
        universe, epsilon});
  };
  for (const auto& first : users) {
    for (const auto& second : users) add({{first}, {second}}, true);
  }
  for (const auto& first : users) {
    for (const auto& after0 : users) {
      for (const auto& after1 : users) add({{first}, {after0, after1}}, false);
    }
  }
  return out;
}

}  // namespace ldpsim
