// Min-max normalization, complement coding and seeded ordering.
#pragma once

#include "art/types.hpp"

#include <cstdint>
#include <vector>

namespace art::prep {

/// Per-feature (min, max) learned from training data; stored with every
/// persisted model so inference applies the same transform.
struct NormalizationRanges {
    Vector min;
    Vector max;
};

/// Learns ranges and maps features into [0,1]; constant features map to 0.5.
std::pair<Matrix, NormalizationRanges> normalizeFit(const Matrix& data);

/// Applies stored ranges, clamping results into [0,1].
Matrix normalizeApply(const NormalizationRanges& ranges, const Matrix& data);
Vector normalizeApply(const NormalizationRanges& ranges, const Vector& x);

/// [x, 1 - x]; doubles the dimension and fixes the L1 norm at d.
Vector complementCode(const Vector& x);
Matrix complementCodeRows(const Matrix& data);

/// SplitMix64 — the PRNG behind all seeded ordering in the toolkit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Deterministic Fisher–Yates permutation of 0..n-1 driven by SplitMix64.
std::vector<std::size_t> shuffleSeeded(std::size_t n, std::uint64_t seed);

}  // namespace art::prep
