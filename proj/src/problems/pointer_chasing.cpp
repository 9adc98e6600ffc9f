#include "ldpsim/problems/pointer_chasing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ldpsim/core/rng.hpp"

namespace ldpsim {

PayloadPtr PCInstance::alice_payload() const {
  return std::make_shared<const PointerPayload>(a);
}

PayloadPtr PCInstance::bob_payload() const {
  return std::make_shared<const PointerPayload>(b);
}

void PCInstance::validate() const {
  if (k < 1) throw std::invalid_argument("pointer chasing needs k >= 1");
  if (l < 2) throw std::invalid_argument("pointer chasing needs l >= 2");
  if (a.size() != l || b.size() != l) {
    throw std::invalid_argument("pointer vectors must have length l");
  }
  for (const auto* vec : {&a, &b}) {
    for (auto value : *vec) {
      if (value < 1 || value > l) {
        throw std::invalid_argument("pointer value outside [1, l]");
      }
    }
  }
}

std::string PointerPayload::describe() const {
  return "pointers(" + std::to_string(pointers_.size()) + ")";
}

PCInstance gen_pc_instance(std::uint32_t k, std::uint32_t l,
                           std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("pointer chasing needs k >= 1");
  if (l < 2) throw std::invalid_argument("pointer chasing needs l >= 2");
  const std::uint64_t stream = derive_seed(seed, kInstanceStream);
  PCInstance instance;
  instance.k = k;
  instance.l = l;
  instance.seed = seed;
  instance.a.resize(l);
  instance.b.resize(l);
  for (std::uint32_t i = 0; i < l; ++i) {
    instance.a[i] = 1 + static_cast<std::uint32_t>(mix64(stream + 2 * i) % l);
    instance.b[i] =
        1 + static_cast<std::uint32_t>(mix64(stream + 2 * i + 1) % l);
  }
  return instance;
}

bool pc_recommended_regime(std::uint32_t k, std::uint32_t l) {
  return static_cast<double>(k) <
         static_cast<double>(l) / std::log2(static_cast<double>(l));
}

std::uint32_t chase_oracle(const PCInstance& instance) {
  std::uint32_t v = instance.a[0];
  for (std::uint32_t i = 1; i <= instance.k; ++i) {
    v = (i % 2 == 1) ? instance.b[v - 1] : instance.a[v - 1];
  }
  return v;
}

std::uint32_t pointer_width(std::uint32_t l) {
  std::uint32_t width = 0;
  while ((std::uint64_t{1} << width) < l) ++width;
  return width;
}

PcBitPredicate::PcBitPredicate(Side side, std::uint32_t index,
                               std::uint32_t bit, std::uint32_t width)
    : side_(side), index_(index), bit_(bit), width_(width) {
  if (index < 1) throw std::invalid_argument("pointer index is 1-based");
  if (bit >= width) throw std::invalid_argument("bit index exceeds width");
}

bool PcBitPredicate::evaluate(const Datum& datum) const {
  if (datum.is_sentinel() || datum.side != side_) return false;
  const auto* pointers = datum.payload_as<PointerPayload>();
  if (pointers == nullptr || index_ > pointers->size()) return false;
  const std::uint32_t code = pointers->at(index_) - 1;
  return ((code >> (width_ - 1 - bit_)) & 1U) != 0;
}

std::string PcBitPredicate::descriptor() const {
  return "pc-bit(side=" + to_string(side_) + ";index=" +
         std::to_string(index_) + ";bit=" + std::to_string(bit_) +
         ";width=" + std::to_string(width_) + ")";
}

}  // namespace ldpsim
