#include "ldpsim/core/rng.hpp"

namespace ldpsim {

static_assert(derive_seed(1, kUserStream) != derive_seed(1, kPublicStream));
static_assert(to_unit_interval(~0ULL) < 1.0);

}  // namespace ldpsim
