// Fuzzy ART category math over complement-coded inputs. All functions are
// pure; the engine owns mutation.
#pragma once

#include "art/category.hpp"
#include "art/types.hpp"

#include <Eigen/Dense>

namespace art::fuzzy {

/// L1 norm of the componentwise minimum (fuzzy AND) of two vectors.
template <class DA, class DB>
double fuzzyAndSum(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    return a.cwiseMin(b).sum();
}

/// Weber-law choice function: |x ^ w| / (alpha + |w|).
inline double activation(const Vector& w, const Vector& x, double alpha) {
    if (w.size() != x.size()) {
        throw DataError("fuzzy activation: dimension mismatch");
    }
    return fuzzyAndSum(x, w) / (alpha + w.sum());
}

/// Match numerator |x ^ w|; the denominator is the constant d fixed by
/// complement coding (|x| = d exactly).
inline double matchOverlap(const Vector& w, const Vector& x) {
    if (w.size() != x.size()) {
        throw DataError("fuzzy match: dimension mismatch");
    }
    return fuzzyAndSum(x, w);
}

inline double matchValue(const Vector& w, const Vector& x, double dnorm) {
    return matchOverlap(w, x) / dnorm;
}

/// Vigilance test |x ^ w| / d >= rho, evaluated sign-exactly.
inline bool vigilancePass(double overlap, double dnorm, double rho) {
    return ratioAtLeast(overlap, dnorm, rho);
}

/// w' = w + beta (x ^ w - w). With beta = 1 the componentwise minimum is
/// taken directly so the fast-learning result is exact; the incremental form
/// used for beta < 1 keeps every component non-increasing at the bit level.
inline Vector learn(const Vector& w, const Vector& x, double beta) {
    if (beta == 1.0) {
        return x.cwiseMin(w);
    }
    return w + beta * (x.cwiseMin(w) - w).eval();
}

/// Category size R = d - |w|; -d for an uncommitted (all-ones) category.
inline double categorySize(const Vector& w, double dnorm) {
    return dnorm - w.sum();
}

/// A freshly committed category is the sample itself (uncommitted all-ones
/// weights immediately learned with beta = 1).
inline FuzzyCategory pointCategory(const Vector& x) {
    return FuzzyCategory{x};
}

}  // namespace art::fuzzy
