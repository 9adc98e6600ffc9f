#pragma once

#include <iosfwd>
#include <variant>

#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"

namespace ldpsim {

// Text formats. Pointer chasing:
//
//   pc k=<k> l=<l> seed=<seed> indexing=1
//   a <l space-separated values in [1, l]>
//   b <l space-separated values in [1, l]>
//
// Hidden layers:
//
//   hl B=<B> L=<L> seed=<seed>
//   layers a=<a> b=<b> label_seed=<label_seed>
//   labeling f seed=<seed_f>
//   labeling g seed=<seed_g>
//   override f <path> <child>       (zero or more; path is dot-separated,
//   override g <path> <child>        '-' for the root)
using Instance = std::variant<HLInstance, PCInstance>;

void write_instance(std::ostream& out, const HLInstance& instance);
void write_instance(std::ostream& out, const PCInstance& instance);
// Throws FormatError on malformed input.
Instance read_instance(std::istream& in);

}  // namespace ldpsim
