#ifndef RGMINOR_FINALIZE_HPP
#define RGMINOR_FINALIZE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rgminor/candidates.hpp"
#include "rgminor/certificate.hpp"
#include "rgminor/pair_state.hpp"

namespace rgminor {

/// A joiner path together with the pair it joined.
struct JoinRecord {
  CandidatePair pair;
  std::vector<Vertex> path;
};

struct FinalizedMinor {
  MinorCertificate certificate;
  std::vector<CandidateIndex> retained;
  std::size_t discarded_deletions = 0;
  std::size_t cover_deletions = 0;
};

/// Deletes discarded candidates, then a greedy vertex cover (highest
/// residual degree first, lowest index on ties) of the pairs still
/// unjoined. Each joiner path whose pair survives is merged into the
/// lower-indexed candidate of that pair.
FinalizedMinor finalize_minor(const CandidateFamily &family, const PairState &state,
                              std::span<const JoinRecord> joins);

} // namespace rgminor

#endif
