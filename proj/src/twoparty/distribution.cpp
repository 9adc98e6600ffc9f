#include "ldpsim/twoparty/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

void TranscriptDistribution::add(const std::string& key, double probability) {
  mass_[key] += probability;
}

double TranscriptDistribution::probability(const std::string& key) const {
  auto it = mass_.find(key);
  return it == mass_.end() ? 0.0 : it->second;
}

double TranscriptDistribution::total() const {
  double sum = 0.0;
  for (const auto& [key, p] : mass_) sum += p;
  return sum;
}

double tv_distance(const TranscriptDistribution& p,
                   const TranscriptDistribution& q) {
  double sum = 0.0;
  auto a = p.entries().begin(), ae = p.entries().end();
  auto b = q.entries().begin(), be = q.entries().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      sum += std::fabs(a->second);
      ++a;
    } else if (a == ae || b->first < a->first) {
      sum += std::fabs(b->second);
      ++b;
    } else {
      sum += std::fabs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return 0.5 * sum;
}

void write_distribution(std::ostream& out, const TranscriptDistribution& d) {
  char buf[40];
  for (const auto& [key, p] : d.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g", p);
    out << (key.empty() ? "-" : key) << "\t" << buf << "\n";
  }
}

TranscriptDistribution read_distribution(std::istream& in) {
  TranscriptDistribution d;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("distribution line " + std::to_string(line_no) +
                        ": expected <key>\\t<probability>");
    }
    std::string key = line.substr(0, tab);
    if (key == "-") key.clear();
    try {
      std::size_t used = 0;
      double p = std::stod(line.substr(tab + 1), &used);
      d.add(key, p);
    } catch (const std::logic_error&) {
      throw FormatError("distribution line " + std::to_string(line_no) +
                        ": bad probability");
    }
  }
  return d;
}

}  // namespace ldpsim
