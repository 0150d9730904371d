// External clustering/classification evaluation.
#pragma once

#include <vector>

namespace art::metrics {

/// Pair-counting adjusted Rand index with the hypergeometric expectation.
/// Unassigned predictions (-1) are treated as one additional cluster.
/// Returns 1.0 for the degenerate case where the index attains its maximum.
double adjustedRandIndex(const std::vector<int>& a, const std::vector<int>& b);

/// Fraction of equal entries; -1 predictions never match.
double accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

}  // namespace art::metrics
