#include "ldpsim/core/transcript_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

namespace {

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

template <class T>
T parse_number(const std::string& text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("transcript line " + std::to_string(line) +
                      ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

void write_transcript(std::ostream& out, const Transcript& transcript,
                      const QueryLog& log) {
  out << "# round\tusers\trandomizers\tbudgets\toutputs\n";
  for (const auto& round : transcript.rounds()) {
    out << round.round_index << '\t';
    for (std::size_t i = 0; i < round.size(); ++i) {
      if (i) out << ',';
      out << round.users[i];
    }
    out << '\t';
    for (std::size_t i = 0; i < round.size(); ++i) {
      if (i) out << '|';
      out << log.at(round.randomizer_ids[i]).descriptor();
    }
    out << '\t';
    for (std::size_t i = 0; i < round.size(); ++i) {
      if (i) out << ',';
      out << format_double(round.epsilons[i]);
    }
    out << '\t';
    for (auto bit : round.outputs) out << static_cast<char>('0' + bit);
    out << '\n';
  }
}

std::vector<ParsedRound> read_transcript_lines(std::istream& in) {
  std::vector<ParsedRound> rounds;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw FormatError("transcript line " + std::to_string(line_number) +
                        ": expected 5 tab-separated fields");
    }
    ParsedRound round;
    round.round_index = parse_number<std::uint64_t>(fields[0], line_number);
    for (const auto& id : split(fields[1], ',')) {
      round.users.push_back(parse_number<UserId>(id, line_number));
    }
    round.descriptors = split(fields[2], '|');
    for (const auto& eps : split(fields[3], ',')) {
      round.epsilons.push_back(std::stod(eps));
    }
    for (char c : fields[4]) {
      if (c != '0' && c != '1') {
        throw FormatError("transcript line " + std::to_string(line_number) +
                          ": outputs must be 0/1");
      }
      round.outputs.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    const std::size_t n = round.users.size();
    if (round.descriptors.size() != n || round.epsilons.size() != n ||
        round.outputs.size() != n) {
      throw FormatError("transcript line " + std::to_string(line_number) +
                        ": field lengths differ");
    }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

}  // namespace ldpsim
