#pragma once

#include <string>

#include "ldpsim/core/randomizer.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

// Rebuilds a randomizer from the descriptor string it wrote into a
// transcript. Supported forms:
//
//   rr(eps=<e>;<predicate>)      randomized response on a predicate
//   const(p=<p>;eps=<e>)         constant law
//   lift(eps=<e>;sender=<side>;table=<t0><t1>)   lifted two-party bit
//
// with predicates hl-edge(...), pc-bit(...), side(...), scalar-eq(...).
// Throws FormatError for anything else.
RandomizerPtr parse_randomizer(const std::string& descriptor);
PredicatePtr parse_predicate(const std::string& descriptor);

}  // namespace ldpsim
