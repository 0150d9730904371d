#include "art/metrics.hpp"

#include "art/types.hpp"

#include <map>
#include <vector>

namespace art::metrics {

namespace {

double pairs(double n) { return n * (n - 1.0) / 2.0; }

}  // namespace

double adjustedRandIndex(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) {
        throw DataError("ari: length mismatch");
    }
    if (a.empty()) {
        throw DataError("ari: empty labelings");
    }

    std::map<std::pair<int, int>, long long> contingency;
    std::map<int, long long> rowSums;
    std::map<int, long long> colSums;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++contingency[{a[i], b[i]}];
        ++rowSums[a[i]];
        ++colSums[b[i]];
    }

    double index = 0.0;
    for (const auto& [key, nij] : contingency) {
        index += pairs(static_cast<double>(nij));
    }
    double rowPairs = 0.0;
    for (const auto& [key, ni] : rowSums) {
        rowPairs += pairs(static_cast<double>(ni));
    }
    double colPairs = 0.0;
    for (const auto& [key, nj] : colSums) {
        colPairs += pairs(static_cast<double>(nj));
    }

    const double total = pairs(static_cast<double>(a.size()));
    const double expected = rowPairs * colPairs / total;
    const double maxIndex = 0.5 * (rowPairs + colPairs);
    if (maxIndex == expected) {
        // Both partitions are trivial (all-singleton or all-one); they can
        // only be identical here.
        return 1.0;
    }
    return (index - expected) / (maxIndex - expected);
}

double accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
    if (pred.size() != truth.size()) {
        throw DataError("accuracy: length mismatch");
    }
    if (pred.empty()) {
        throw DataError("accuracy: empty labelings");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i] >= 0 && pred[i] == truth[i]) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(pred.size());
}

}  // namespace art::metrics
