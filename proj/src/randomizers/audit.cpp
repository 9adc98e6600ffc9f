#include "ldpsim/randomizers/audit.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <string>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

double audit_user(std::span<const UserResponse> responses, const Datum& datum,
                  std::span<const Datum> neighbor_data) {
  double worst = 0.0;
  for (const Datum& neighbor : neighbor_data) {
    double up = 0.0, down = 0.0;
    for (const auto& response : responses) {
      if (response.randomizer == nullptr) {
        throw AuditError("response without a randomizer");
      }
      const auto r = response.randomizer->directed_log_ratios(datum, neighbor);
      up += r[0];
      down += r[1];
    }
    worst = std::max({worst, up, down});
  }
  return worst;
}

double AuditReport::max_log_ratio() const {
  if (!worst_user) return 0.0;
  return find(*worst_user)->max_log_ratio;
}

const UserAudit* AuditReport::find(UserId user) const {
  auto it = std::lower_bound(
      per_user.begin(), per_user.end(), user,
      [](const UserAudit& entry, UserId id) { return entry.user < id; });
  if (it == per_user.end() || it->user != user) return nullptr;
  return &*it;
}

AuditReport audit_transcript(const Transcript& transcript,
                             const Population& population,
                             const QueryLog& query_log,
                             const AuditOptions& options) {
  std::vector<Datum> neighbors = {population.datum_for(Side::kAlice),
                                  population.datum_for(Side::kBob)};
  if (options.include_sentinel) neighbors.push_back(sentinel_datum());
  neighbors.insert(neighbors.end(), options.extra_neighbors.begin(),
                   options.extra_neighbors.end());
  const std::size_t k = neighbors.size();
  const std::size_t n = population.size();

  // totals[2j + d][user]: accumulated log ratio against neighbor j in
  // direction d (datum over neighbor, then neighbor over datum).
  std::vector<std::vector<double>> totals(2 * k, std::vector<double>(n, 0.0));
  std::vector<std::uint8_t> appeared(n, 0);
  // ratio[id][2j + d][side], filled lazily per randomizer id.
  std::vector<std::vector<std::array<double, 2>>> ratio(query_log.size());
  std::vector<double> contribution;

  for (const auto& round : transcript.rounds()) {
    const std::size_t m = round.size();
    for (UserId user : round.users) {
      if (user >= n) {
        throw AuditError("transcript user " + std::to_string(user) +
                         " is not in the population");
      }
      appeared[user] = 1;
    }
    for (RandomizerId id : round.randomizer_ids) {
      if (!query_log.contains(id)) {
        throw AuditError("query log has no entry for randomizer id " +
                         std::to_string(id) + " in round " +
                         std::to_string(round.round_index));
      }
      if (!ratio[id].empty()) continue;
      const Randomizer& randomizer = query_log.at(id);
      ratio[id].resize(2 * k);
      for (std::size_t j = 0; j < k; ++j) {
        for (Side side : {Side::kAlice, Side::kBob}) {
          const auto r = randomizer.directed_log_ratios(
              population.datum_for(side), neighbors[j]);
          ratio[id][2 * j][static_cast<std::size_t>(side)] = r[0];
          ratio[id][2 * j + 1][static_cast<std::size_t>(side)] = r[1];
        }
      }
    }
    contribution.resize(m);
    for (std::size_t j = 0; j < 2 * k; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        const auto side =
            static_cast<std::size_t>(population.side(round.users[i]));
        contribution[i] = ratio[round.randomizer_ids[i]][j][side];
      }
      kernels::accumulate(options.kernel_policy, round.users, contribution,
                          totals[j]);
    }
  }

  AuditReport report;
  double worst = -1.0;
  for (UserId user = 0; user < n; ++user) {
    if (!appeared[user]) continue;
    double value = 0.0;
    for (const auto& t : totals) value = std::max(value, t[user]);
    report.per_user.push_back(UserAudit{user, value});
    if (value > worst) {
      worst = value;
      report.worst_user = user;
    }
  }
  return report;
}

void write_audit_report(std::ostream& out, const AuditReport& report,
                        double declared_epsilon, double slack) {
  char buffer[96];
  out << "user\tmax_log_ratio\tbudget\tstatus\n";
  for (const auto& entry : report.per_user) {
    std::snprintf(buffer, sizeof buffer, "%u\t%.17g\t%.17g\t%s\n", entry.user,
                  entry.max_log_ratio, declared_epsilon,
                  entry.max_log_ratio <= declared_epsilon + slack ? "pass"
                                                                  : "fail");
    out << buffer;
  }
  if (report.worst_user) {
    std::snprintf(buffer, sizeof buffer, "# worst_user=%u max=%.17g\n",
                  *report.worst_user, report.max_log_ratio());
    out << buffer;
  } else {
    out << "# worst_user=none max=0\n";
  }
}

}  // namespace ldpsim
