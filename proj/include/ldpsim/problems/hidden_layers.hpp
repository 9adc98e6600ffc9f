#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ldpsim/core/datum.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

using VertexPath = std::vector<std::uint32_t>;

// Assigns one outgoing child index to every vertex of one tree layer. The
// vertex is named by its root-to-vertex path. Labels are a seeded pure
// function of the path, so huge layers never need to be materialized;
// explicit entries override the seeded function.
class Labeling {
 public:
  explicit Labeling(std::uint64_t seed) : seed_(seed) {}
  Labeling(std::uint64_t seed, std::map<VertexPath, std::uint32_t> overrides);

  std::uint32_t child(std::span<const std::uint32_t> vertex,
                      std::uint32_t branching) const;
  std::uint64_t seed() const { return seed_; }
  const std::map<VertexPath, std::uint32_t>& overrides() const {
    return overrides_;
  }

 private:
  std::uint64_t seed_;
  std::map<VertexPath, std::uint32_t> overrides_;
};

using LabelingPtr = std::shared_ptr<const Labeling>;

// One player's hidden layer: its index and the labeling of its vertices.
class HiddenLayerPayload final : public Payload {
 public:
  HiddenLayerPayload(std::uint32_t layer, std::uint32_t branching,
                     LabelingPtr labeling);

  std::uint32_t layer() const { return layer_; }
  std::uint32_t branching() const { return branching_; }
  const Labeling& labeling() const { return *labeling_; }
  // Does this payload label the edge (vertex -> child)?
  bool labels_edge(std::span<const std::uint32_t> vertex,
                   std::uint32_t child) const;
  std::string describe() const override;

 private:
  std::uint32_t layer_;
  std::uint32_t branching_;
  LabelingPtr labeling_;
};

// A B-ary tree whose leaves sit at depth L. Paths from the root are lists
// of L child indices; vertex layers 0..L-1 each choose one outgoing edge.
// Alice holds layer a with labeling f, Bob holds layer b with labeling g.
struct HLInstance {
  std::uint32_t branching = 1;
  std::uint32_t num_layers = 2;
  std::uint32_t a = 0;
  std::uint32_t b = 1;
  std::uint64_t label_seed = 0;
  std::uint64_t seed = 0;
  LabelingPtr f;
  LabelingPtr g;

  PayloadPtr alice_payload() const;
  PayloadPtr bob_payload() const;
};

struct LeafPath {
  std::vector<std::uint32_t> path;
  bool operator==(const LeafPath&) const = default;
};

// Seeded instance: a uniform over even layers in [0, L-2], b uniform over
// odd layers in [1, L-1]. Throws std::invalid_argument for B < 1 or L < 2.
HLInstance gen_hl_instance(std::uint32_t branching, std::uint32_t num_layers,
                           std::uint64_t seed);

// Instance with caller-chosen layers and labelings. Requires a != b and
// both < L; layer parity is not enforced here.
HLInstance make_hl_instance(std::uint32_t branching, std::uint32_t num_layers,
                            std::uint32_t a, std::uint32_t b, LabelingPtr f,
                            LabelingPtr g, std::uint64_t label_seed = 0);

// True iff the leaf follows f at layer a and g at layer b.
// Throws std::invalid_argument for a path of the wrong length or entries
// outside [0, B-1].
bool hl_consistent(const LeafPath& leaf, const HLInstance& instance);

inline constexpr std::uint64_t kMaxEnumeratedLeaves = 1ULL << 24;

// Brute-force count over all B^L leaves. Throws SizeGuardError past 2^24.
std::uint64_t hl_count_consistent(const HLInstance& instance);

// "My hidden layer is `layer` and my labeling sends `vertex` to `child`."
class HlEdgePredicate final : public Predicate {
 public:
  HlEdgePredicate(std::uint32_t layer, VertexPath vertex, std::uint32_t child);

  bool evaluate(const Datum& datum) const override;
  std::string descriptor() const override;

  std::uint32_t layer() const { return layer_; }
  const VertexPath& vertex() const { return vertex_; }
  std::uint32_t child() const { return child_; }

 private:
  std::uint32_t layer_;
  VertexPath vertex_;
  std::uint32_t child_;
};

}  // namespace ldpsim
