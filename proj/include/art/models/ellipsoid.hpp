// Ellipsoid ART category math. Categories are hyperellipses with a fixed
// major-axis direction (set once, on the second encoded sample) and a fixed
// major/minor axis ratio mu.
#pragma once

#include "art/category.hpp"
#include "art/params.hpp"
#include "art/types.hpp"

#include <algorithm>
#include <cmath>

namespace art::ellipsoid {

/// Elliptical distance; Euclidean until the axis direction is set.
inline double distance(const EllipsoidCategory& c, const Vector& x, double mu) {
    const Vector diff = x - c.center;
    if (c.axis.isZero(0.0)) {
        return diff.norm();
    }
    const double proj = c.axis.dot(diff);
    double arg = diff.squaredNorm() - (1.0 - mu * mu) * proj * proj;
    if (arg < 0.0) {
        if (arg < -1e-12) {
            throw ModelError("ellipsoid distance: negative value under sqrt");
        }
        arg = 0.0;
    }
    return (1.0 / mu) * std::sqrt(arg);
}

/// T = (Rbar - R - max{R, dis}) / (Rbar - 2R + alpha).
inline double activation(const EllipsoidCategory& c, const Vector& x, const EllipsoidParams& p) {
    if (p.rbar <= 2.0 * c.radius) {
        throw ConfigError("ellipsoid: rbar must exceed twice every category radius");
    }
    const double reach = std::max(c.radius, distance(c, x, p.mu));
    return (p.rbar - c.radius - reach) / (p.rbar - 2.0 * c.radius + p.alpha);
}

/// M = 1 - (R + max{R, dis}) / Rbar.
inline double matchValue(const EllipsoidCategory& c, const Vector& x, const EllipsoidParams& p) {
    const double reach = std::max(c.radius, distance(c, x, p.mu));
    return 1.0 - (c.radius + reach) / p.rbar;
}

/// Vigilance M >= rho tested as R + max{R, dis} <= Rbar (1 - rho); the
/// left-hand side is the quantity the radius-bound invariant pins.
inline bool vigilancePass(const EllipsoidCategory& c, double dis, const EllipsoidParams& p) {
    return c.radius + std::max(c.radius, dis) <= scaledComplement(p.rbar, p.rho);
}

/// Mirrors the hypersphere update with the elliptical distance; on the
/// category's second encoded sample the axis direction is set from the
/// centroid (post-update by default) and stays fixed afterwards.
inline EllipsoidCategory learn(const EllipsoidCategory& c, const Vector& x,
                               const EllipsoidParams& p) {
    const double dis = distance(c, x, p.mu);
    EllipsoidCategory out;
    out.axis = c.axis;
    out.radius = c.radius + (p.beta / 2.0) * (std::max(c.radius, dis) - c.radius);
    if (dis == 0.0) {
        out.center = c.center;
    } else {
        const double scale = 1.0 - std::min(c.radius, dis) / dis;
        out.center = c.center + (p.beta / 2.0) * scale * (x - c.center);
    }
    if (c.axis.isZero(0.0)) {
        const Vector ref = p.axisFromPreUpdateCenter ? (x - c.center).eval() : (x - out.center).eval();
        const double norm = ref.norm();
        if (norm > 0.0) {
            out.axis = ref / norm;
        }
    }
    return out;
}

inline EllipsoidCategory pointCategory(const Vector& x) {
    return EllipsoidCategory{x, Vector::Zero(x.size()), 0.0};
}

/// (1/mu) * max pairwise distance; the lower bound for the ellipsoid rbar.
double rbarLowerBound(const Matrix& data, double mu);

/// rbarLowerBound when usable, otherwise (1/mu) * sqrt(d) for degenerate data.
double resolveRbar(const Matrix& data, double mu);

}  // namespace art::ellipsoid
