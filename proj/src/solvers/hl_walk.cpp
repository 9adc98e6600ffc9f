#include "ldpsim/solvers/hl_walk.hpp"

#include <memory>
#include <stdexcept>

namespace ldpsim {

HiddenLayerWalk::HiddenLayerWalk(HLShape shape, double threshold)
    : shape_(shape), threshold_(threshold) {
  if (shape.branching < 1 || shape.num_layers < 2) {
    throw std::invalid_argument("hl walk: need B >= 1 and L >= 2");
  }
  path_.reserve(shape.num_layers);
}

PredicatePtr HiddenLayerWalk::pending_predicate() const {
  if (done()) throw std::logic_error("hl walk: already at a leaf");
  return std::make_shared<HlEdgePredicate>(level(), path_, child_);
}

void HiddenLayerWalk::observe(double estimate) {
  if (done()) throw std::logic_error("hl walk: already at a leaf");
  ++queries_;
  if (estimate > threshold_ || child_ + 1 == shape_.branching) {
    path_.push_back(child_);
    child_ = 0;
  } else {
    ++child_;
  }
}

}  // namespace ldpsim
