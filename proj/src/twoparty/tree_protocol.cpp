#include "ldpsim/twoparty/tree_protocol.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {
namespace {

bool is_bit_string(const std::string& s) {
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TreeProtocol::TreeProtocol(std::uint32_t depth, ChannelSpec channel)
    : depth_(depth), channel_(channel) {
  if (depth > 20) throw std::invalid_argument("tree depth must be <= 20");
  channel_.validate();
  nodes_ = std::make_shared<std::vector<std::optional<TreeNode>>>(
      (std::size_t{1} << depth) - 1);
}

std::size_t TreeProtocol::index_of(const std::string& history) {
  std::size_t value = 0;
  for (char c : history) value = (value << 1) | (c == '1' ? 1u : 0u);
  return (std::size_t{1} << history.size()) - 1 + value;
}

void TreeProtocol::set_node(const std::string& history, TreeNode node) {
  if (history.size() + 1 > depth_ || !is_bit_string(history)) {
    throw std::invalid_argument("tree node history '" + history +
                                "' out of range");
  }
  if (!(node.p0 >= 0 && node.p0 <= 1 && node.p1 >= 0 && node.p1 <= 1)) {
    throw std::invalid_argument("tree node probabilities must be in [0,1]");
  }
  // Copy on write so clones taken earlier keep their tree.
  if (nodes_.use_count() > 1) {
    nodes_ = std::make_shared<std::vector<std::optional<TreeNode>>>(*nodes_);
  }
  (*nodes_)[index_of(history)] = node;
}

std::optional<TreeNode> TreeProtocol::node(const std::string& history) const {
  if (history.size() >= depth_ || !is_bit_string(history)) return std::nullopt;
  return (*nodes_)[index_of(history)];
}

bool TreeProtocol::deterministic() const {
  for (const auto& n : *nodes_) {
    if (!n) continue;
    for (double p : {n->p0, n->p1}) {
      if (p != 0.0 && p != 1.0) return false;
    }
  }
  return true;
}

void TreeProtocol::set_channel(ChannelSpec channel) {
  channel.validate();
  channel_ = channel;
}

const std::optional<TreeNode>& TreeProtocol::current() const {
  static const std::optional<TreeNode> kLeaf;
  if (history_.size() >= depth_) return kLeaf;
  return (*nodes_)[index_of(history_)];
}

TwoPartyAction TreeProtocol::next_action() const {
  const auto& n = current();
  if (!n) {
    Answer answer;
    for (char c : history_) answer.value.push_back(c - '0');
    return HaltAction{std::move(answer)};
  }
  return SendAction{n->sender};
}

double TreeProtocol::send_probability(const Datum& input) const {
  const auto& n = current();
  if (!n) throw std::logic_error("tree protocol: no pending send");
  return input_bit(input) ? n->p1 : n->p0;
}

void TreeProtocol::observe_bit(std::uint8_t received) {
  if (!current()) throw std::logic_error("tree protocol: already halted");
  history_.push_back(received ? '1' : '0');
}

std::unique_ptr<TwoPartyProtocol> TreeProtocol::clone() const {
  return std::make_unique<TreeProtocol>(*this);
}

void write_tree_protocol(std::ostream& out, const TreeProtocol& protocol) {
  const ChannelSpec& ch = protocol.channel();
  out << "tree depth=" << protocol.depth() << " channel="
      << (ch.kind == ChannelKind::kBsc ? "bsc" : "noiseless");
  if (ch.kind == ChannelKind::kBsc) out << " flip=" << format_double(ch.crossover);
  out << "\n";
  // Breadth-first, left to right.
  for (std::uint32_t len = 0; len < protocol.depth(); ++len) {
    for (std::uint64_t v = 0; v < (1ULL << len); ++v) {
      std::string h;
      for (std::uint32_t i = 0; i < len; ++i) {
        h.push_back(((v >> (len - 1 - i)) & 1) ? '1' : '0');
      }
      auto n = protocol.node(h);
      if (!n) continue;
      out << "node " << (h.empty() ? "-" : h) << " " << to_string(n->sender)
          << " " << format_double(n->p0) << " " << format_double(n->p1)
          << "\n";
    }
  }
}

TreeProtocol read_tree_protocol(std::istream& in) {
  std::string line;
  std::optional<TreeProtocol> protocol;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw FormatError("tree protocol line " + std::to_string(line_no) + ": " +
                      why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "tree") {
      if (protocol) fail("duplicate header");
      std::uint32_t depth = 0;
      bool have_depth = false;
      ChannelSpec ch;
      std::string kv;
      while (ss >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("expected key=value");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        try {
          if (key == "depth") {
            depth = static_cast<std::uint32_t>(std::stoul(val));
            have_depth = true;
          } else if (key == "channel") {
            if (val == "bsc") ch.kind = ChannelKind::kBsc;
            else if (val != "noiseless") fail("unknown channel " + val);
          } else if (key == "flip") {
            ch.crossover = std::stod(val);
          } else {
            fail("unknown key " + key);
          }
        } catch (const std::logic_error&) {
          fail("bad value for " + key);
        }
      }
      if (!have_depth) fail("missing depth");
      try {
        protocol.emplace(depth, ch);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (head == "node") {
      if (!protocol) fail("node before header");
      std::string h, sender;
      TreeNode node;
      if (!(ss >> h >> sender >> node.p0 >> node.p1)) fail("malformed node");
      if (h == "-") h.clear();
      if (sender == "alice") node.sender = Side::kAlice;
      else if (sender == "bob") node.sender = Side::kBob;
      else fail("unknown sender " + sender);
      try {
        protocol->set_node(h, node);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else {
      fail("unknown record " + head);
    }
  }
  if (!protocol) throw FormatError("tree protocol: missing header");
  return *protocol;
}

}  // namespace ldpsim
