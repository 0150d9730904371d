#include "art/models/bayesian.hpp"
#include "art/models/ellipsoid.hpp"
#include "art/models/hypersphere.hpp"

#include <cmath>

namespace art::sphere {

double rmax(const Matrix& data) {
    if (data.rows() < 2) {
        throw DataError("rmax: need at least two samples");
    }
    double maxSq = 0.0;
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < data.rows(); ++j) {
            maxSq = std::max(maxSq, (data.row(i) - data.row(j)).squaredNorm());
        }
    }
    return 0.5 * std::sqrt(maxSq);
}

double resolveRbar(const Matrix& data) {
    const double fallback = std::sqrt(static_cast<double>(data.cols())) / 2.0;
    if (data.rows() < 2) {
        return fallback;
    }
    const double r = rmax(data);
    return r > 0.0 ? r : fallback;
}

}  // namespace art::sphere

namespace art::ellipsoid {

double rbarLowerBound(const Matrix& data, double mu) {
    if (data.rows() < 2) {
        throw DataError("rbar bound: need at least two samples");
    }
    double maxSq = 0.0;
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < data.rows(); ++j) {
            maxSq = std::max(maxSq, (data.row(i) - data.row(j)).squaredNorm());
        }
    }
    return std::sqrt(maxSq) / mu;
}

double resolveRbar(const Matrix& data, double mu) {
    const double fallback = std::sqrt(static_cast<double>(data.cols())) / mu;
    if (data.rows() < 2) {
        return fallback;
    }
    const double r = rbarLowerBound(data, mu);
    return r > 0.0 ? r : fallback;
}

}  // namespace art::ellipsoid

namespace art::bayes {

Vector posteriors(const std::vector<BayesCategory>& categories,
                  const std::vector<std::int64_t>& counts, const Vector& x) {
    if (categories.empty() || categories.size() != counts.size()) {
        throw ModelError("bayes posteriors: empty or mismatched category list");
    }
    std::int64_t total = 0;
    for (std::int64_t n : counts) {
        total += n;
    }
    Vector logScores(static_cast<Eigen::Index>(categories.size()));
    for (std::size_t j = 0; j < categories.size(); ++j) {
        logScores[static_cast<Eigen::Index>(j)] =
            logLikelihood(categories[j], x) +
            std::log(static_cast<double>(counts[j]) / static_cast<double>(total));
    }
    // log-sum-exp normalization
    const double peak = logScores.maxCoeff();
    Vector out = (logScores.array() - peak).exp();
    out /= out.sum();
    return out;
}

}  // namespace art::bayes
