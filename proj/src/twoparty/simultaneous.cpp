#include "ldpsim/twoparty/simultaneous.hpp"

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

SimultaneousProtocol::SimultaneousProtocol(std::vector<RoundTables> tables,
                                           ChannelSpec channel)
    : channel_(channel) {
  channel_.validate();
  if (tables.empty() || tables.size() > 8) {
    throw std::invalid_argument("simultaneous protocol needs 1..8 rounds");
  }
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const std::size_t want = std::size_t{2} << (2 * t);
    for (const auto& table : tables[t]) {
      if (table.size() != want) {
        throw std::invalid_argument("round " + std::to_string(t) +
                                    " table must have " +
                                    std::to_string(want) + " entries");
      }
      for (double p : table) {
        if (!(p >= 0 && p <= 1)) {
          throw std::invalid_argument("table entries must be in [0,1]");
        }
      }
    }
  }
  tables_ = std::make_shared<const std::vector<RoundTables>>(std::move(tables));
}

TwoPartyAction SimultaneousProtocol::next_action() const {
  if (bits_.size() == max_bits()) {
    Answer answer;
    for (char c : bits_) answer.value.push_back(c - '0');
    return HaltAction{std::move(answer)};
  }
  return SendAction{bits_.size() % 2 == 0 ? Side::kAlice : Side::kBob};
}

double SimultaneousProtocol::send_probability(const Datum& input) const {
  if (bits_.size() == max_bits()) {
    throw std::logic_error("simultaneous protocol: no pending send");
  }
  const std::size_t t = bits_.size() / 2;
  const std::size_t side = bits_.size() % 2;
  std::size_t history = 0;
  for (std::size_t i = 0; i < 2 * t; ++i) {
    history = (history << 1) | (bits_[i] == '1' ? 1u : 0u);
  }
  const std::size_t index =
      (static_cast<std::size_t>(input_bit(input)) << (2 * t)) + history;
  return (*tables_)[t][side][index];
}

void SimultaneousProtocol::observe_bit(std::uint8_t received) {
  if (bits_.size() == max_bits()) {
    throw std::logic_error("simultaneous protocol: already halted");
  }
  bits_.push_back(received ? '1' : '0');
}

std::unique_ptr<TwoPartyProtocol> SimultaneousProtocol::clone() const {
  return std::make_unique<SimultaneousProtocol>(*this);
}

void write_simultaneous_protocol(std::ostream& out,
                                 const SimultaneousProtocol& protocol) {
  const ChannelSpec& ch = protocol.channel();
  out << "simultaneous rounds=" << protocol.rounds() << " channel="
      << (ch.kind == ChannelKind::kBsc ? "bsc" : "noiseless");
  char buf[40];
  if (ch.kind == ChannelKind::kBsc) {
    std::snprintf(buf, sizeof buf, "%.17g", ch.crossover);
    out << " flip=" << buf;
  }
  out << "\n";
  for (std::size_t t = 0; t < protocol.rounds(); ++t) {
    for (int side = 0; side < 2; ++side) {
      out << "table " << t << (side == 0 ? " alice" : " bob");
      for (double p : protocol.tables()[t][side]) {
        std::snprintf(buf, sizeof buf, "%.17g", p);
        out << " " << buf;
      }
      out << "\n";
    }
  }
}

SimultaneousProtocol read_simultaneous_protocol(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw FormatError("simultaneous protocol line " + std::to_string(line_no) +
                      ": " + why);
  };
  std::optional<std::uint32_t> rounds;
  ChannelSpec ch;
  std::vector<SimultaneousProtocol::RoundTables> tables;
  std::vector<std::array<bool, 2>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "simultaneous") {
      if (rounds) fail("duplicate header");
      std::string kv;
      while (ss >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail("expected key=value");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        try {
          if (key == "rounds") {
            rounds = static_cast<std::uint32_t>(std::stoul(val));
          } else if (key == "channel") {
            if (val == "bsc") ch.kind = ChannelKind::kBsc;
            else if (val != "noiseless") fail("unknown channel " + val);
          } else if (key == "flip") {
            ch.crossover = std::stod(val);
          } else {
            fail("unknown key " + key);
          }
        } catch (const std::logic_error&) {
          fail("bad value for " + key);
        }
      }
      if (!rounds) fail("missing rounds");
      if (*rounds < 1 || *rounds > 8) fail("rounds must be 1..8");
      tables.resize(*rounds);
      seen.assign(*rounds, {false, false});
    } else if (head == "table") {
      if (!rounds) fail("table before header");
      std::size_t t = 0;
      std::string side;
      if (!(ss >> t >> side)) fail("expected: table <t> alice|bob ...");
      if (t >= *rounds) fail("round out of range");
      int s = side == "alice" ? 0 : side == "bob" ? 1 : -1;
      if (s < 0) fail("unknown side " + side);
      if (seen[t][s]) fail("duplicate table");
      seen[t][s] = true;
      std::string tok;
      while (ss >> tok) {
        try {
          tables[t][s].push_back(std::stod(tok));
        } catch (const std::logic_error&) {
          fail("bad probability " + tok);
        }
      }
    } else {
      fail("unknown record " + head);
    }
  }
  if (!rounds) throw FormatError("simultaneous protocol: missing header");
  for (std::size_t t = 0; t < *rounds; ++t) {
    if (!seen[t][0] || !seen[t][1]) {
      throw FormatError("simultaneous protocol: round " + std::to_string(t) +
                        " is missing a table");
    }
  }
  try {
    return SimultaneousProtocol(std::move(tables), ch);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("simultaneous protocol: ") + e.what());
  }
}

}  // namespace ldpsim
