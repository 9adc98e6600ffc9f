#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ldpsim/twoparty/lower.hpp"
#include "ldpsim/twoparty/simultaneous.hpp"
#include "ldpsim/twoparty/tree_protocol.hpp"

namespace ldpsim {

// Deterministic next-bit functions of one input bit: 0, 1, x, not x.
inline constexpr std::array<std::array<double, 2>, 4> kBitFunctions = {
    {{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}}};

// Deterministic protocol trees of at most 3 bits over single-bit inputs:
//   - every tree of depth <= 2 where each node picks its sender and
//     function freely (649 trees, including the empty one);
//   - every full depth-3 tree whose sender depends only on the depth and
//     whose per-node function is arbitrary (8 * 4^7 trees).
// All trees are built with depth 3 over `channel`.
std::uint64_t lift_family_size();
void for_each_lift_protocol(const ChannelSpec& channel,
                            const std::function<void(const TreeProtocol&)>& fn);

// A deterministic tree of depth <= `depth` with every node's sender and
// function drawn independently; each non-root node is a leaf with
// probability `leaf_probability`.
TreeProtocol random_tree_protocol(std::uint32_t depth, const ChannelSpec& channel,
                                  std::mt19937_64& rng,
                                  double leaf_probability = 0.2);

// Every deterministic 2-round simultaneous protocol with single-bit inputs
// and messages (4 * 4 * 256 * 256 of them).
std::uint64_t simultaneous_family_size();
void for_each_simultaneous_protocol(
    const std::function<void(const SimultaneousProtocol&)>& fn);

// Two-user one-bit protocols at budget `epsilon` built from
// randomized-response, constant and mixed-law users. Covers user 2 asked
// in the same round as user 1, and in a later round with a query chosen by
// user 1's output.
std::vector<OneBitLdpProtocol> lower_fixtures(double epsilon);

}  // namespace ldpsim
