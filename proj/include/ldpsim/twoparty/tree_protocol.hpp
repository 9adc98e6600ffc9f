#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

// One internal node: who speaks and P(send 1) for input bit 0 and 1.
struct TreeNode {
  Side sender = Side::kAlice;
  double p0 = 0.0;
  double p1 = 0.0;
  bool operator==(const TreeNode&) const = default;
};

// Protocol tree over single-bit inputs, indexed by the history of received
// bits. A history without a node is a leaf; the answer at a leaf is the
// received bit string.
class TreeProtocol final : public TwoPartyProtocol {
 public:
  TreeProtocol(std::uint32_t depth, ChannelSpec channel);

  // History is a string of '0'/'1'. Throws std::invalid_argument when the
  // history is longer than depth - 1 or the probabilities are not in [0,1].
  void set_node(const std::string& history, TreeNode node);
  std::optional<TreeNode> node(const std::string& history) const;
  std::uint32_t depth() const { return depth_; }
  bool deterministic() const;
  void set_channel(ChannelSpec channel);

  TwoPartyAction next_action() const override;
  double send_probability(const Datum& input) const override;
  void observe_bit(std::uint8_t received) override;
  std::string view() const override { return history_; }
  const ChannelSpec& channel() const override { return channel_; }
  std::uint32_t max_bits() const override { return depth_; }
  std::unique_ptr<TwoPartyProtocol> clone() const override;
  std::string name() const override { return "tree"; }

 private:
  static std::size_t index_of(const std::string& history);
  const std::optional<TreeNode>& current() const;

  std::uint32_t depth_;
  ChannelSpec channel_;
  std::shared_ptr<std::vector<std::optional<TreeNode>>> nodes_;
  std::string history_;
};

// Text format:
//   tree depth=<d> channel=noiseless|bsc flip=<f>
//   node <history or -> alice|bob <p0> <p1>
void write_tree_protocol(std::ostream& out, const TreeProtocol& protocol);
// Throws FormatError.
TreeProtocol read_tree_protocol(std::istream& in);

}  // namespace ldpsim
