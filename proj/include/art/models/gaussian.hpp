// Gaussian ART category math: diagonal Gaussians with instance-count priors.
// All likelihood work is done in the log domain.
#pragma once

#include "art/category.hpp"
#include "art/params.hpp"
#include "art/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace art::gauss {

/// -1/2 sum((mu_i - x_i)/sigma_i)^2 — the log of the match function.
inline double logMatch(const GaussCategory& c, const Vector& x) {
    const Vector z = (c.mean - x).cwiseQuotient(c.sigma);
    const double v = -0.5 * z.squaredNorm();
    if (std::isnan(v)) {
        throw ModelError("gaussian: non-finite match (sigma underflow)");
    }
    return v;
}

/// Log of the diagonal Gaussian density at x.
inline double logLikelihood(const GaussCategory& c, const Vector& x) {
    const double d = static_cast<double>(x.size());
    const double logDet = 2.0 * c.sigma.array().log().sum();
    const double quad = logMatch(c, x);
    const double v = quad - 0.5 * (d * std::log(2.0 * std::numbers::pi) + logDet);
    if (!std::isfinite(v) && !(v == -std::numeric_limits<double>::infinity())) {
        throw ModelError("gaussian: non-finite log-likelihood (sigma underflow)");
    }
    return v;
}

/// Unnormalized log-posterior: log p(x|c) + log(n_j / n_total).
inline double logPosterior(const GaussCategory& c, std::int64_t count, std::int64_t totalCount,
                           const Vector& x) {
    return logLikelihood(c, x) +
           std::log(static_cast<double>(count) / static_cast<double>(totalCount));
}

/// Sequential mean/variance re-estimation; countBefore is n_j prior to this
/// sample.
inline GaussCategory learn(const GaussCategory& c, std::int64_t countBefore, const Vector& x) {
    const double n = static_cast<double>(countBefore + 1);
    GaussCategory out;
    out.mean = (1.0 - 1.0 / n) * c.mean + (1.0 / n) * x;
    const Vector dev = out.mean - x;
    out.sigma = ((1.0 - 1.0 / n) * c.sigma.array().square() + (1.0 / n) * dev.array().square())
                    .sqrt()
                    .matrix();
    return out;
}

inline GaussCategory pointCategory(const Vector& x, double sigmaInit) {
    return GaussCategory{x, Vector::Constant(x.size(), sigmaInit)};
}

}  // namespace art::gauss
