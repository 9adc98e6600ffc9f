#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/engine.hpp"
#include "ldpsim/twoparty/distribution.hpp"
#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

enum class OutcomeKey : std::uint8_t { kView, kAnswer, kViewAndAnswer };

inline constexpr std::uint64_t kMaxEnumeratedPaths = 1ULL << 20;

struct EnumerateOptions {
  OutcomeKey key = OutcomeKey::kView;
  std::uint64_t max_paths = kMaxEnumeratedPaths;
};

struct TwoPartyPath {
  double probability = 0.0;
  std::string received;
  std::vector<Side> senders;
  std::string view;
  Answer answer;
};

// Depth-first traversal of every execution of p on the given inputs. Each
// send branches on the received bit, whose law folds in the sender's coin
// and the channel flip; each public coin branches on its value. Zero
// probability branches are pruned. Throws SizeGuardError past max_paths
// visited nodes.
void visit_two_party_paths(const TwoPartyProtocol& p, const Datum& alice,
                           const Datum& bob,
                           const std::function<void(const TwoPartyPath&)>& fn,
                           std::uint64_t max_paths = kMaxEnumeratedPaths);

TranscriptDistribution enumerate_transcript_distribution(
    const TwoPartyProtocol& p, const Datum& alice, const Datum& bob,
    const EnumerateOptions& options = {});

// Exact law of a locally private protocol whose users hold Alice's or
// Bob's payload. A user's side is a fair coin drawn the first time the user
// is queried. In sequential mode a user is never queried again, so the
// side is summed out in place. The view is the concatenation of all round
// outputs. Interactivity is enforced as in execute().
TranscriptDistribution enumerate_ldp_distribution(
    const ProtocolDriver& driver, PayloadPtr alice_payload,
    PayloadPtr bob_payload, InteractivityMode mode,
    const EnumerateOptions& options = {},
    std::uint32_t user_limit = 1u << 20);

std::string outcome_key(OutcomeKey mode, const std::string& view,
                        const Answer& answer);

}  // namespace ldpsim
