#include "ldpsim/problems/instance_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

namespace {

std::map<std::string, std::string> key_values(std::istringstream& tokens) {
  std::map<std::string, std::string> values;
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw FormatError("instance: expected key=value, got '" + token + "'");
    }
    values[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return values;
}

std::uint64_t require_u64(const std::map<std::string, std::string>& values,
                          const std::string& key) {
  auto it = values.find(key);
  if (it == values.end()) throw FormatError("instance: missing " + key);
  try {
    std::size_t used = 0;
    const auto value = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return value;
  } catch (const std::exception&) {
    throw FormatError("instance: bad value for " + key);
  }
}

std::string path_string(const VertexPath& path) {
  if (path.empty()) return "-";
  std::string text;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) text += '.';
    text += std::to_string(path[i]);
  }
  return text;
}

VertexPath parse_path(const std::string& text) {
  VertexPath path;
  if (text == "-") return path;
  std::istringstream parts(text);
  std::string part;
  while (std::getline(parts, part, '.')) {
    try {
      path.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    } catch (const std::exception&) {
      throw FormatError("instance: bad path '" + text + "'");
    }
  }
  return path;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') return true;
  }
  return false;
}

std::vector<std::uint32_t> read_vector(std::istream& in, const char* tag,
                                       std::uint32_t expected) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw FormatError(std::string("instance: missing vector ") + tag);
  }
  std::istringstream tokens(line);
  std::string head;
  tokens >> head;
  if (head != tag) {
    throw FormatError(std::string("instance: expected vector ") + tag);
  }
  std::vector<std::uint32_t> values;
  std::uint64_t value = 0;
  while (tokens >> value) values.push_back(static_cast<std::uint32_t>(value));
  if (!tokens.eof() || values.size() != expected) {
    throw FormatError(std::string("instance: vector ") + tag +
                      " must have l entries");
  }
  return values;
}

}  // namespace

void write_instance(std::ostream& out, const HLInstance& instance) {
  out << "hl B=" << instance.branching << " L=" << instance.num_layers
      << " seed=" << instance.seed << '\n';
  out << "layers a=" << instance.a << " b=" << instance.b
      << " label_seed=" << instance.label_seed << '\n';
  out << "labeling f seed=" << instance.f->seed() << '\n';
  out << "labeling g seed=" << instance.g->seed() << '\n';
  for (const auto& [name, labeling] :
       {std::pair{"f", instance.f}, std::pair{"g", instance.g}}) {
    for (const auto& [path, child] : labeling->overrides()) {
      out << "override " << name << ' ' << path_string(path) << ' ' << child
          << '\n';
    }
  }
}

void write_instance(std::ostream& out, const PCInstance& instance) {
  out << "pc k=" << instance.k << " l=" << instance.l
      << " seed=" << instance.seed << " indexing=1\n";
  out << 'a';
  for (auto v : instance.a) out << ' ' << v;
  out << "\nb";
  for (auto v : instance.b) out << ' ' << v;
  out << '\n';
}

Instance read_instance(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw FormatError("instance: empty input");
  std::istringstream header(line);
  std::string tag;
  header >> tag;
  const auto params = key_values(header);

  if (tag == "pc") {
    if (auto it = params.find("indexing"); it != params.end() &&
                                           it->second != "1") {
      throw FormatError("instance: only 1-based indexing is supported");
    }
    PCInstance instance;
    instance.k = static_cast<std::uint32_t>(require_u64(params, "k"));
    instance.l = static_cast<std::uint32_t>(require_u64(params, "l"));
    instance.seed = require_u64(params, "seed");
    instance.a = read_vector(in, "a", instance.l);
    instance.b = read_vector(in, "b", instance.l);
    try {
      instance.validate();
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("instance: ") + e.what());
    }
    return instance;
  }

  if (tag == "hl") {
    const auto branching = static_cast<std::uint32_t>(require_u64(params, "B"));
    const auto layers = static_cast<std::uint32_t>(require_u64(params, "L"));
    const auto seed = require_u64(params, "seed");
    if (!next_content_line(in, line)) throw FormatError("instance: no layers");
    std::istringstream layer_line(line);
    layer_line >> tag;
    if (tag != "layers") throw FormatError("instance: expected 'layers'");
    const auto layer_values = key_values(layer_line);
    std::uint64_t seeds[2] = {0, 0};
    std::map<VertexPath, std::uint32_t> overrides[2];
    bool have_seed[2] = {false, false};
    while (next_content_line(in, line)) {
      std::istringstream tokens(line);
      std::string kind, name;
      tokens >> kind >> name;
      const int which = name == "f" ? 0 : name == "g" ? 1 : -1;
      if (which < 0) throw FormatError("instance: labeling must be f or g");
      if (kind == "labeling") {
        seeds[which] = require_u64(key_values(tokens), "seed");
        have_seed[which] = true;
      } else if (kind == "override") {
        std::string path;
        std::uint32_t child = 0;
        if (!(tokens >> path >> child)) {
          throw FormatError("instance: bad override line");
        }
        overrides[which][parse_path(path)] = child;
      } else {
        throw FormatError("instance: unknown line '" + kind + "'");
      }
    }
    if (!have_seed[0] || !have_seed[1]) {
      throw FormatError("instance: both labelings need a seed line");
    }
    try {
      HLInstance instance = make_hl_instance(
          branching, layers,
          static_cast<std::uint32_t>(require_u64(layer_values, "a")),
          static_cast<std::uint32_t>(require_u64(layer_values, "b")),
          std::make_shared<const Labeling>(seeds[0], overrides[0]),
          std::make_shared<const Labeling>(seeds[1], overrides[1]),
          require_u64(layer_values, "label_seed"));
      instance.seed = seed;
      return instance;
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("instance: ") + e.what());
    }
  }
  throw FormatError("instance: unknown problem tag '" + tag + "'");
}

}  // namespace ldpsim
