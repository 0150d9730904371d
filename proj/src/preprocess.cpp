#include "art/preprocess.hpp"

#include <algorithm>
#include <numeric>

namespace art::prep {

std::pair<Matrix, NormalizationRanges> normalizeFit(const Matrix& data) {
    if (data.rows() < 1) {
        throw DataError("normalize: need at least one row");
    }
    NormalizationRanges ranges;
    ranges.min = data.colwise().minCoeff();
    ranges.max = data.colwise().maxCoeff();
    return {normalizeApply(ranges, data), ranges};
}

Vector normalizeApply(const NormalizationRanges& ranges, const Vector& x) {
    if (x.size() != ranges.min.size()) {
        throw DataError("normalize: dimension mismatch with stored ranges");
    }
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double span = ranges.max[i] - ranges.min[i];
        if (span <= 0.0) {
            out[i] = 0.5;  // constant feature
        } else {
            out[i] = std::clamp((x[i] - ranges.min[i]) / span, 0.0, 1.0);
        }
    }
    return out;
}

Matrix normalizeApply(const NormalizationRanges& ranges, const Matrix& data) {
    Matrix out(data.rows(), data.cols());
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
        out.row(r) = normalizeApply(ranges, Vector(data.row(r))).transpose();
    }
    return out;
}

Vector complementCode(const Vector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
            throw DataError("complement coding: component outside [0, 1]");
        }
    }
    Vector out(2 * x.size());
    out.head(x.size()) = x;
    out.tail(x.size()) = Vector::Ones(x.size()) - x;
    return out;
}

Matrix complementCodeRows(const Matrix& data) {
    Matrix out(data.rows(), 2 * data.cols());
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
        out.row(r) = complementCode(Vector(data.row(r))).transpose();
    }
    return out;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v > limit);
    return v % bound;
}

std::vector<std::size_t> shuffleSeeded(std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw DataError("shuffle: n must be >= 1");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace art::prep
