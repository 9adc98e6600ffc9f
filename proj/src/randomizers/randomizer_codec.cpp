#include "ldpsim/randomizers/randomizer_codec.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/twoparty/lift.hpp"

namespace ldpsim {
namespace {

[[noreturn]] void fail(const std::string& text, const std::string& why) {
  throw FormatError("cannot parse '" + text + "': " + why);
}

// "name(body)" -> {name, body}.
std::pair<std::string, std::string> split_call(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.empty() || text.back() != ')') {
    fail(text, "expected name(...)");
  }
  return {text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

std::map<std::string, std::string> fields(const std::string& text,
                                          const std::string& body) {
  std::map<std::string, std::string> out;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(text, "expected key=value in " + item);
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& kv,
                        const std::string& key, const std::string& text) {
  auto it = kv.find(key);
  if (it == kv.end()) fail(text, "missing " + key);
  return it->second;
}

double to_double(const std::string& v, const std::string& text) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) fail(text, "bad number " + v);
    return d;
  } catch (const std::logic_error&) {
    fail(text, "bad number " + v);
  }
}

std::uint32_t to_u32(const std::string& v, const std::string& text) {
  try {
    std::size_t used = 0;
    unsigned long x = std::stoul(v, &used);
    if (used != v.size() || v[0] == '-' || x > 0xffffffffUL) {
      fail(text, "bad integer " + v);
    }
    return static_cast<std::uint32_t>(x);
  } catch (const std::logic_error&) {
    fail(text, "bad integer " + v);
  }
}

Side to_side(const std::string& v, const std::string& text) {
  if (v == "alice") return Side::kAlice;
  if (v == "bob") return Side::kBob;
  fail(text, "bad side " + v);
}

VertexPath to_path(const std::string& v, const std::string& text) {
  VertexPath path;
  if (v == "-") return path;
  std::istringstream ss(v);
  std::string part;
  while (std::getline(ss, part, '.')) path.push_back(to_u32(part, text));
  return path;
}

}  // namespace

PredicatePtr parse_predicate(const std::string& descriptor) {
  auto [name, body] = split_call(descriptor);
  try {
    if (name == "side") {
      return std::make_shared<SidePredicate>(to_side(body, descriptor));
    }
    if (name == "scalar-eq") {
      try {
        std::size_t used = 0;
        long long v = std::stoll(body, &used);
        if (used != body.size()) fail(descriptor, "bad integer");
        return std::make_shared<ScalarEqualsPredicate>(v);
      } catch (const std::logic_error&) {
        fail(descriptor, "bad integer");
      }
    }
    auto kv = fields(descriptor, body);
    if (name == "hl-edge") {
      return std::make_shared<HlEdgePredicate>(
          to_u32(need(kv, "layer", descriptor), descriptor),
          to_path(need(kv, "path", descriptor), descriptor),
          to_u32(need(kv, "child", descriptor), descriptor));
    }
    if (name == "pc-bit") {
      return std::make_shared<PcBitPredicate>(
          to_side(need(kv, "side", descriptor), descriptor),
          to_u32(need(kv, "index", descriptor), descriptor),
          to_u32(need(kv, "bit", descriptor), descriptor),
          to_u32(need(kv, "width", descriptor), descriptor));
    }
  } catch (const std::invalid_argument& e) {
    fail(descriptor, e.what());
  }
  fail(descriptor, "unknown predicate " + name);
}

RandomizerPtr parse_randomizer(const std::string& descriptor) {
  auto [name, body] = split_call(descriptor);
  try {
    if (name == "rr") {
      const auto semi = body.find(';');
      if (semi == std::string::npos || body.rfind("eps=", 0) != 0) {
        fail(descriptor, "expected rr(eps=<e>;<predicate>)");
      }
      const double eps = to_double(body.substr(4, semi - 4), descriptor);
      return std::make_shared<RRQuery>(eps,
                                       parse_predicate(body.substr(semi + 1)));
    }
    auto kv = fields(descriptor, body);
    if (name == "const") {
      return std::make_shared<ConstantRandomizer>(
          to_double(need(kv, "p", descriptor), descriptor),
          to_double(need(kv, "eps", descriptor), descriptor));
    }
    if (name == "lift") {
      const std::string table = need(kv, "table", descriptor);
      if (table.size() != 2 || (table[0] != '0' && table[0] != '1') ||
          (table[1] != '0' && table[1] != '1')) {
        fail(descriptor, "table must be two bits");
      }
      auto f = [table](const Datum& d) {
        const auto* s = d.payload_as<ScalarPayload>();
        if (s == nullptr || (s->value() != 0 && s->value() != 1)) {
          throw std::invalid_argument("lifted bit needs a single-bit input");
        }
        return table[static_cast<std::size_t>(s->value())] - '0';
      };
      return std::make_shared<LiftedBitRandomizer>(
          to_double(need(kv, "eps", descriptor), descriptor),
          to_side(need(kv, "sender", descriptor), descriptor), f, table);
    }
  } catch (const std::invalid_argument& e) {
    fail(descriptor, e.what());
  }
  fail(descriptor, "unknown randomizer " + name);
}

}  // namespace ldpsim
