#include "ldpsim/twoparty/tree_protocol.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/twoparty/families.hpp"
#include "ldpsim/twoparty/simultaneous.hpp"

namespace ldpsim {
namespace {

TreeProtocol two_bit_tree(ChannelSpec channel) {
  TreeProtocol t(2, channel);
  t.set_node("", {Side::kAlice, 0.0, 1.0});
  t.set_node("0", {Side::kBob, 0.0, 1.0});
  t.set_node("1", {Side::kBob, 1.0, 0.0});
  return t;
}

TEST(TreeProtocolTest, NodesAndDeterminism) {
  TreeProtocol t = two_bit_tree(ChannelSpec::noiseless());
  EXPECT_TRUE(t.deterministic());
  EXPECT_FALSE(t.node("00").has_value());
  EXPECT_EQ(t.node("1")->p0, 1.0);
  t.set_node("0", {Side::kBob, 0.3, 1.0});
  EXPECT_FALSE(t.deterministic());
  EXPECT_THROW(t.set_node("00", {}), std::invalid_argument);
  EXPECT_THROW(t.set_node("", {Side::kAlice, 1.5, 0.0}), std::invalid_argument);
  EXPECT_THROW(t.set_node("2", {}), std::invalid_argument);
}

TEST(TreeProtocolTest, RunFollowsTheInputs) {
  std::mt19937_64 rng(3);
  TreeProtocol t = two_bit_tree(ChannelSpec::noiseless());
  const TwoPartyRun r = run_two_party(t, bit_input(Side::kAlice, 1),
                                      bit_input(Side::kBob, 1), rng);
  EXPECT_EQ(r.received, "10");  // bob negates y after a 1
  EXPECT_EQ(r.view, "10");
  EXPECT_EQ(r.senders, (std::vector<Side>{Side::kAlice, Side::kBob}));
  EXPECT_EQ(count_alternating_rounds(r.senders), 2u);
}

TEST(TreeProtocolTest, TextRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    TreeProtocol t = random_tree_protocol(3, ChannelSpec::bsc(0.375), rng);
    t.set_node("", {Side::kBob, 1.0 / 3.0, 0.7});
    std::stringstream s;
    write_tree_protocol(s, t);
    const TreeProtocol back = read_tree_protocol(s);
    EXPECT_EQ(back.depth(), 3u);
    EXPECT_EQ(back.channel(), t.channel());
    for (const char* h : {"", "0", "1", "00", "01", "10", "11"}) {
      EXPECT_EQ(back.node(h), t.node(h)) << h;
    }
  }
}

TEST(TreeProtocolTest, MalformedTextThrows) {
  for (const char* text :
       {"", "tree depth=x channel=noiseless flip=0\n",
        "tree depth=2 channel=wire flip=0\n",
        "tree depth=2 channel=noiseless flip=0\nnode 000 alice 0 1\n",
        "tree depth=2 channel=noiseless flip=0\nnode - carol 0 1\n",
        "tree depth=2 channel=noiseless flip=0\nnode - alice 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_tree_protocol(in), FormatError) << text;
  }
}

TEST(TreeProtocolTest, RandomTreesAreDeterministicAndSeeded) {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 20; ++i) {
    const TreeProtocol x = random_tree_protocol(3, ChannelSpec::noiseless(), a);
    const TreeProtocol y = random_tree_protocol(3, ChannelSpec::noiseless(), b);
    EXPECT_TRUE(x.deterministic());
    for (const char* h : {"", "0", "1", "00", "01", "10", "11"}) {
      EXPECT_EQ(x.node(h), y.node(h));
    }
    EXPECT_TRUE(x.node("").has_value());
  }
}

SimultaneousProtocol xor_protocol() {
  std::vector<SimultaneousProtocol::RoundTables> t(2);
  t[0][0] = {0, 1};
  t[0][1] = {0, 1};
  // Round 1: xor of the two round-0 bits, for either input.
  const std::vector<double> x = {0, 1, 1, 0, 0, 1, 1, 0};
  t[1][0] = x;
  t[1][1] = x;
  return SimultaneousProtocol(t);
}

TEST(SimultaneousTest, RunAndRoundTrip) {
  std::mt19937_64 rng(2);
  SimultaneousProtocol p = xor_protocol();
  EXPECT_EQ(p.rounds(), 2u);
  EXPECT_EQ(p.max_bits(), 4u);
  const TwoPartyRun r = run_two_party(p, bit_input(Side::kAlice, 1),
                                      bit_input(Side::kBob, 0), rng);
  EXPECT_EQ(r.view, "1011");
  std::stringstream s;
  write_simultaneous_protocol(s, p);
  const SimultaneousProtocol back = read_simultaneous_protocol(s);
  EXPECT_EQ(back.tables(), p.tables());
  EXPECT_EQ(back.channel(), p.channel());
}

TEST(SimultaneousTest, RejectsBadShapes) {
  std::vector<SimultaneousProtocol::RoundTables> t(1);
  t[0][0] = {0, 1, 0};
  t[0][1] = {0, 1};
  EXPECT_THROW(SimultaneousProtocol{t}, std::invalid_argument);
  for (const char* text :
       {"simultaneous rounds=0 channel=noiseless flip=0\n",
        "simultaneous rounds=1 channel=noiseless flip=0\ntable 0 alice 0 1\n",
        "simultaneous rounds=1 channel=noiseless flip=0\ntable 0 alice 0 1\n"
        "table 0 bob 0\n",
        "simultaneous rounds=1 channel=noiseless flip=0\ntable 1 alice 0 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_simultaneous_protocol(in), FormatError) << text;
  }
}

}  // namespace
}  // namespace ldpsim
