#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace ldpsim {

// Exact law of some outcome, keyed by a string (usually a bit string).
class TranscriptDistribution {
 public:
  void add(const std::string& key, double probability);
  double probability(const std::string& key) const;
  double total() const;
  std::size_t size() const { return mass_.size(); }
  const std::map<std::string, double>& entries() const { return mass_; }

 private:
  std::map<std::string, double> mass_;
};

// (1/2) * sum |P(k) - Q(k)| over the union of keys.
double tv_distance(const TranscriptDistribution& p,
                   const TranscriptDistribution& q);

// One "<key>\t<probability>" line per entry in key order, '-' for the
// empty key, probabilities with 17 significant digits.
void write_distribution(std::ostream& out, const TranscriptDistribution& d);
// Throws FormatError.
TranscriptDistribution read_distribution(std::istream& in);

}  // namespace ldpsim
