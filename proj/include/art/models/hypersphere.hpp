// Hypersphere ART category math (raw [0,1]^d input space, no complement
// coding).
#pragma once

#include "art/category.hpp"
#include "art/params.hpp"
#include "art/types.hpp"

#include <algorithm>
#include <cmath>

namespace art::sphere {

inline double distance(const SphereCategory& c, const Vector& x) {
    return (x - c.center).norm();
}

/// T = (Rbar - max(R, ||x - m||)) / (Rbar - R + alpha).
inline double activation(const SphereCategory& c, const Vector& x, const SphereParams& p) {
    if (p.rbar <= c.radius) {
        throw ConfigError("hypersphere: rbar must exceed every category radius");
    }
    const double reach = std::max(c.radius, distance(c, x));
    return (p.rbar - reach) / (p.rbar - c.radius + p.alpha);
}

/// M = 1 - max(R, ||x - m||) / Rbar.
inline double matchValue(const SphereCategory& c, const Vector& x, double rbar) {
    return 1.0 - std::max(c.radius, distance(c, x)) / rbar;
}

/// Vigilance M >= rho tested as max(R, dist) <= Rbar (1 - rho) with the
/// bound rounded once.
inline bool vigilancePass(const SphereCategory& c, double dist, const SphereParams& p) {
    return std::max(c.radius, dist) <= scaledComplement(p.rbar, p.rho);
}

/// Radius and centroid updates; the centroid does not move when the sample
/// coincides with it (the dist -> 0 limit of the update).
inline SphereCategory learn(const SphereCategory& c, const Vector& x, double beta) {
    const double dist = distance(c, x);
    SphereCategory out;
    out.radius = c.radius + (beta / 2.0) * (std::max(c.radius, dist) - c.radius);
    if (dist == 0.0) {
        out.center = c.center;
    } else {
        const double scale = 1.0 - std::min(c.radius, dist) / dist;
        out.center = c.center + (beta / 2.0) * scale * (x - c.center);
    }
    return out;
}

inline SphereCategory pointCategory(const Vector& x) {
    return SphereCategory{x, 0.0};
}

/// Half the maximum pairwise Euclidean distance; the lower bound for rbar.
double rmax(const Matrix& data);

/// rmax when usable, otherwise the sqrt(d)/2 fallback for degenerate data.
double resolveRbar(const Matrix& data);

}  // namespace art::sphere
