#include "ldpsim/problems/hidden_layers.hpp"

#include <stdexcept>
#include <string>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/rng.hpp"

namespace ldpsim {

namespace {

std::string path_string(std::span<const std::uint32_t> path) {
  if (path.empty()) return "-";
  std::string text;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) text += '.';
    text += std::to_string(path[i]);
  }
  return text;
}

}  // namespace

Labeling::Labeling(std::uint64_t seed,
                   std::map<VertexPath, std::uint32_t> overrides)
    : seed_(seed), overrides_(std::move(overrides)) {}

std::uint32_t Labeling::child(std::span<const std::uint32_t> vertex,
                              std::uint32_t branching) const {
  if (!overrides_.empty()) {
    auto it = overrides_.find(VertexPath(vertex.begin(), vertex.end()));
    if (it != overrides_.end()) return it->second;
  }
  std::uint64_t h = mix64(seed_ ^ (vertex.size() * 0x9e3779b97f4a7c15ULL));
  for (std::uint32_t step : vertex) h = mix64(h ^ step);
  return static_cast<std::uint32_t>(h % branching);
}

HiddenLayerPayload::HiddenLayerPayload(std::uint32_t layer,
                                       std::uint32_t branching,
                                       LabelingPtr labeling)
    : layer_(layer), branching_(branching), labeling_(std::move(labeling)) {
  if (!labeling_) throw std::invalid_argument("hidden layer needs a labeling");
}

bool HiddenLayerPayload::labels_edge(std::span<const std::uint32_t> vertex,
                                     std::uint32_t child) const {
  return vertex.size() == layer_ &&
         labeling_->child(vertex, branching_) == child;
}

std::string HiddenLayerPayload::describe() const {
  return "hl-layer(" + std::to_string(layer_) + ")";
}

PayloadPtr HLInstance::alice_payload() const {
  return std::make_shared<const HiddenLayerPayload>(a, branching, f);
}

PayloadPtr HLInstance::bob_payload() const {
  return std::make_shared<const HiddenLayerPayload>(b, branching, g);
}

HLInstance make_hl_instance(std::uint32_t branching, std::uint32_t num_layers,
                            std::uint32_t a, std::uint32_t b, LabelingPtr f,
                            LabelingPtr g, std::uint64_t label_seed) {
  if (branching < 1) throw std::invalid_argument("branching must be >= 1");
  if (num_layers < 2) throw std::invalid_argument("num_layers must be >= 2");
  if (a >= num_layers || b >= num_layers || a == b) {
    throw std::invalid_argument("hidden layers must be distinct and < L");
  }
  if (!f || !g) throw std::invalid_argument("labelings must be provided");
  HLInstance instance;
  instance.branching = branching;
  instance.num_layers = num_layers;
  instance.a = a;
  instance.b = b;
  instance.label_seed = label_seed;
  instance.f = std::move(f);
  instance.g = std::move(g);
  return instance;
}

HLInstance gen_hl_instance(std::uint32_t branching, std::uint32_t num_layers,
                           std::uint64_t seed) {
  if (branching < 1) throw std::invalid_argument("branching must be >= 1");
  if (num_layers < 2) throw std::invalid_argument("num_layers must be >= 2");
  const std::uint64_t stream = derive_seed(seed, kInstanceStream);
  // Even layers in [0, L-2] and odd layers in [1, L-1] both number L/2.
  const std::uint64_t choices = num_layers / 2;
  const auto a = static_cast<std::uint32_t>(2 * (mix64(stream) % choices));
  const auto b =
      static_cast<std::uint32_t>(2 * (mix64(stream + 1) % choices) + 1);
  const std::uint64_t label_seed = derive_seed(seed, kLabelStream);
  HLInstance instance = make_hl_instance(
      branching, num_layers, a, b,
      std::make_shared<const Labeling>(derive_seed(label_seed, 0)),
      std::make_shared<const Labeling>(derive_seed(label_seed, 1)),
      label_seed);
  instance.seed = seed;
  return instance;
}

bool hl_consistent(const LeafPath& leaf, const HLInstance& instance) {
  const auto& path = leaf.path;
  if (path.size() != instance.num_layers) {
    throw std::invalid_argument("leaf path has length " +
                                std::to_string(path.size()) + ", expected " +
                                std::to_string(instance.num_layers));
  }
  for (auto step : path) {
    if (step >= instance.branching) {
      throw std::invalid_argument("leaf path entry out of range");
    }
  }
  const std::span<const std::uint32_t> full(path);
  return path[instance.a] ==
             instance.f->child(full.first(instance.a), instance.branching) &&
         path[instance.b] ==
             instance.g->child(full.first(instance.b), instance.branching);
}

std::uint64_t hl_count_consistent(const HLInstance& instance) {
  std::uint64_t leaves = 1;
  for (std::uint32_t i = 0; i < instance.num_layers; ++i) {
    leaves *= instance.branching;
    if (leaves > kMaxEnumeratedLeaves) {
      throw SizeGuardError("hl_count_consistent: more than 2^24 leaves");
    }
  }
  LeafPath leaf{std::vector<std::uint32_t>(instance.num_layers, 0)};
  std::uint64_t count = 0;
  for (std::uint64_t index = 0; index < leaves; ++index) {
    std::uint64_t rest = index;
    for (std::uint32_t i = instance.num_layers; i-- > 0;) {
      leaf.path[i] = static_cast<std::uint32_t>(rest % instance.branching);
      rest /= instance.branching;
    }
    if (hl_consistent(leaf, instance)) ++count;
  }
  return count;
}

HlEdgePredicate::HlEdgePredicate(std::uint32_t layer, VertexPath vertex,
                                 std::uint32_t child)
    : layer_(layer), vertex_(std::move(vertex)), child_(child) {
  if (vertex_.size() != layer_) {
    throw std::invalid_argument("vertex path length must equal its layer");
  }
}

bool HlEdgePredicate::evaluate(const Datum& datum) const {
  const auto* payload = datum.payload_as<HiddenLayerPayload>();
  return payload != nullptr && payload->layer() == layer_ &&
         payload->labels_edge(vertex_, child_);
}

std::string HlEdgePredicate::descriptor() const {
  return "hl-edge(layer=" + std::to_string(layer_) +
         ";path=" + path_string(vertex_) + ";child=" + std::to_string(child_) +
         ")";
}

}  // namespace ldpsim
