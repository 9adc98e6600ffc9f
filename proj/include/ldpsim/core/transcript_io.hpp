#pragma once

#include <iosfwd>
#include <vector>

#include "ldpsim/core/transcript.hpp"

namespace ldpsim {

// Line format, one round per line, tab separated, in this field order:
//
//   round_index  users  randomizers  budgets  outputs
//
// users     comma-separated decimal user ids
// randomizers  '|'-separated randomizer descriptor strings, one per user
// budgets   comma-separated per-call epsilons, printed with %.17g
// outputs   one character '0' or '1' per user
//
// Lines starting with '#' are comments. The writer emits a header comment.
void write_transcript(std::ostream& out, const Transcript& transcript,
                      const QueryLog& log);

struct ParsedRound {
  std::uint64_t round_index = 0;
  std::vector<UserId> users;
  std::vector<std::string> descriptors;
  std::vector<double> epsilons;
  std::vector<std::uint8_t> outputs;
};

// Throws FormatError on malformed input.
std::vector<ParsedRound> read_transcript_lines(std::istream& in);

}  // namespace ldpsim
