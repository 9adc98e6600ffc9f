#pragma once

#include <cstdint>

#include "ldpsim/problems/hidden_layers.hpp"

namespace ldpsim {

struct HLShape {
  std::uint32_t branching = 1;
  std::uint32_t num_layers = 2;
};

// Greedy root-to-leaf descent shared by the fully interactive solver and
// the sequential baseline. At vertex v on level l the walk tests children
// j = 0..B-1 in order and moves to v_j as soon as the debiased vote
// exceeds the threshold. The last child is taken unconditionally.
class HiddenLayerWalk {
 public:
  HiddenLayerWalk(HLShape shape, double threshold);

  bool done() const { return path_.size() == shape_.num_layers; }
  std::uint32_t level() const {
    return static_cast<std::uint32_t>(path_.size());
  }
  const VertexPath& vertex() const { return path_; }
  std::uint32_t child() const { return child_; }
  std::uint64_t queries() const { return queries_; }

  // Predicate for the pending (vertex, child) query.
  PredicatePtr pending_predicate() const;
  // Feeds the debiased estimate for the pending query.
  void observe(double estimate);
  LeafPath leaf() const { return LeafPath{path_}; }

 private:
  HLShape shape_;
  double threshold_;
  VertexPath path_;
  std::uint32_t child_ = 0;
  std::uint64_t queries_ = 0;
};

}  // namespace ldpsim
