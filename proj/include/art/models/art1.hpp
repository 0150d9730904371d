// ART 1 category math for binary inputs.
#pragma once

#include "art/category.hpp"
#include "art/types.hpp"

namespace art::art1 {

inline void requireBinary(const Vector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] != 0.0 && x[i] != 1.0) {
            throw DataError("art1: input must be binary");
        }
    }
    if (x.sum() <= 0.0) {
        throw DataError("art1: zero-norm binary input");
    }
}

/// Bottom-up signal T = <w_bu, x>.
inline double activation(const Art1Category& c, const Vector& x) {
    return c.bottomUp.dot(x);
}

/// Activation of the uncommitted node that always joins the competition.
inline double uncommittedActivation(const Vector& x, double L, int dim) {
    return L / (L - 1.0 + static_cast<double>(dim)) * x.sum();
}

/// Match numerator |x AND w_td|; denominator is |x|.
inline double matchOverlap(const Art1Category& c, const Vector& x) {
    return c.topDown.cwiseMin(x).sum();
}

inline Vector normalizedBottomUp(const Vector& topDown, double L) {
    return (L / (L - 1.0 + topDown.sum())) * topDown;
}

inline Art1Category learn(const Art1Category& c, const Vector& x, double L) {
    Art1Category out;
    out.topDown = c.topDown.cwiseMin(x);
    out.bottomUp = normalizedBottomUp(out.topDown, L);
    return out;
}

/// Committing the uncommitted node (w_td = ones) to x.
inline Art1Category commit(const Vector& x, double L) {
    Art1Category out;
    out.topDown = x;
    out.bottomUp = normalizedBottomUp(out.topDown, L);
    return out;
}

}  // namespace art::art1
