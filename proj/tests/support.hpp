// Shared synthetic fixtures, all driven by the toolkit's SplitMix64 so every
// dataset is deterministic across platforms.
#pragma once

#include "art/params.hpp"
#include "art/preprocess.hpp"
#include "art/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace support {

using art::Matrix;
using art::Vector;

/// Uniform points in axis-aligned boxes around the given centers.
/// Returns the points (rows) and the blob index of each row.
inline std::pair<Matrix, std::vector<int>> blobs(const Matrix& centers, int pointsPerBlob,
                                                 double halfWidth, std::uint64_t seed) {
    art::prep::SplitMix64 rng(seed);
    const Eigen::Index d = centers.cols();
    Matrix data(centers.rows() * pointsPerBlob, d);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(data.rows()));
    Eigen::Index row = 0;
    for (Eigen::Index b = 0; b < centers.rows(); ++b) {
        for (int i = 0; i < pointsPerBlob; ++i, ++row) {
            for (Eigen::Index k = 0; k < d; ++k) {
                data(row, k) = centers(b, k) + halfWidth * (2.0 * rng.uniform() - 1.0);
            }
            labels.push_back(static_cast<int>(b));
        }
    }
    return {data, labels};
}

inline Matrix uniform(int n, int d, std::uint64_t seed) {
    art::prep::SplitMix64 rng(seed);
    Matrix data(n, d);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            data(r, c) = rng.uniform();
        }
    }
    return data;
}

/// Interleaves two row sets under a seeded permutation; returns the permuted
/// data with per-row original labels.
inline std::pair<Matrix, std::vector<int>> shuffled(const Matrix& data,
                                                    const std::vector<int>& labels,
                                                    std::uint64_t seed) {
    const auto perm = art::prep::shuffleSeeded(static_cast<std::size_t>(data.rows()), seed);
    Matrix out(data.rows(), data.cols());
    std::vector<int> outLabels(labels.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = data.row(static_cast<Eigen::Index>(perm[i]));
        outLabels[i] = labels[perm[i]];
    }
    return {out, outLabels};
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

/// The reference TopoART fixture: two uniform blobs (160 points each) plus
/// 20% uniform background noise (80 points), shuffled; noise rows carry
/// label -1. All parameters of the run are pinned in topoFixtureParams().
struct TwoBlobsNoise {
    Matrix data;              // 400 x 2, raw [0,1]^2
    std::vector<int> labels;  // blob id or -1 for noise
};

inline TwoBlobsNoise twoBlobsNoise(std::uint64_t seed = 2024) {
    Matrix centers(2, 2);
    centers << 0.27, 0.3, 0.72, 0.7;
    auto [blobData, blobLabels] = blobs(centers, 160, 0.1, seed);
    const Matrix noise = uniform(80, 2, seed + 1);
    Matrix all = vstack(blobData, noise);
    std::vector<int> labels = blobLabels;
    labels.insert(labels.end(), 80, -1);
    auto [shuffledData, shuffledLabels] = shuffled(all, labels, seed + 2);
    return {shuffledData, shuffledLabels};
}

inline art::TopoParams topoFixtureParams() {
    art::TopoParams p;
    p.alpha = 0.001;
    p.beta2 = 0.6;
    p.rhoA = 0.84;  // rho_b = 0.92
    p.phi = 5;
    p.tau = 100;
    return p;
}

inline constexpr int kTopoFixtureEpochs = 3;

}  // namespace support
