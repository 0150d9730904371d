// Bayesian ART category math: full-covariance Gaussians, posterior
// activation normalized over the whole category list, and a hyper-volume
// (determinant) vigilance with the reversed inequality M <= rho.
#pragma once

#include "art/category.hpp"
#include "art/params.hpp"
#include "art/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace art::bayes {

struct CholeskyView {
    Eigen::LLT<Matrix> llt;
    double logDet;  // log det(Sigma)
};

inline CholeskyView factor(const BayesCategory& c) {
    CholeskyView out{Eigen::LLT<Matrix>(c.cov), 0.0};
    if (out.llt.info() != Eigen::Success) {
        throw ModelError("bayes: covariance not positive-definite");
    }
    out.logDet = 2.0 * out.llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    return out;
}

inline double logLikelihood(const BayesCategory& c, const Vector& x) {
    const CholeskyView f = factor(c);
    const Vector diff = x - c.mean;
    const double quad = f.llt.matrixL().solve(diff).squaredNorm();
    const double d = static_cast<double>(x.size());
    return -0.5 * (quad + d * std::log(2.0 * std::numbers::pi) + f.logDet);
}

/// Hyper-volume match value det(Sigma); resonance requires M <= rho.
inline double matchValue(const BayesCategory& c) {
    return std::exp(factor(c).logDet);
}

inline bool vigilancePass(const BayesCategory& c, double rho) {
    // Determinant underflow to zero counts as volume zero and passes.
    return matchValue(c) <= rho;
}

/// Normalized posteriors over the full category list (sums to one).
Vector posteriors(const std::vector<BayesCategory>& categories,
                  const std::vector<std::int64_t>& counts, const Vector& x);

/// Sequential ML covariance update, optionally masked to the diagonal. The
/// diagonal is floored at 1e-12 to keep the Cholesky factorization well
/// posed on duplicate-heavy streams.
inline BayesCategory learn(const BayesCategory& c, std::int64_t countBefore, const Vector& x,
                           bool diagonal) {
    const double nOld = static_cast<double>(countBefore);
    const double nNew = nOld + 1.0;
    BayesCategory out;
    out.mean = (1.0 - 1.0 / nNew) * c.mean + (1.0 / nNew) * x;
    const Vector dev = x - out.mean;
    Matrix update = dev * dev.transpose();
    if (diagonal) {
        update = update.diagonal().asDiagonal();
    }
    out.cov = (nOld / nNew) * c.cov + (1.0 / nNew) * update;
    for (Eigen::Index i = 0; i < out.cov.rows(); ++i) {
        if (out.cov(i, i) < 1e-12) {
            out.cov(i, i) = 1e-12;
        }
    }
    return out;
}

inline BayesCategory pointCategory(const Vector& x, double sigmaInit) {
    return BayesCategory{
        x, (sigmaInit * sigmaInit) * Matrix::Identity(x.size(), x.size())};
}

}  // namespace art::bayes
