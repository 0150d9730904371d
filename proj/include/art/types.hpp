// Core scalar/vector aliases, error types and model tags shared across the
// toolkit. Everything numeric is double precision: the persistence format and
// the convergence checks are bit-exact, so the scalar type is part of the
// on-disk contract.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace art {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Bad hyperparameters or an inconsistent model configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-contract input data (files, samples, dimensions).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Broken model state or an unreadable/incompatible model file.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ResonanceVerdict {
    Accept,             // learn the tested category
    Reject,             // inhibit and continue the search
    AcceptAsNewLinked,  // DVFA only: spawn a point category in the tested
                        // category's cluster
};

enum class ModelKind {
    Art1,
    Fuzzy,
    Dvfa,
    Hypersphere,
    Ellipsoid,
    Gaussian,
    Bayes,
    TopoArt,
};

std::string toString(ModelKind kind);
ModelKind modelKindFromString(const std::string& name);

/// True for the models that operate on complement-coded inputs.
constexpr bool usesComplementCoding(ModelKind kind) {
    return kind == ModelKind::Fuzzy || kind == ModelKind::Dvfa || kind == ModelKind::TopoArt;
}

// Sign-exact test of num/den >= rho for den > 0. fma evaluates num - rho*den
// with a single rounding, so the comparison never flips across the threshold
// the way fl(num/den) >= rho can.
inline bool ratioAtLeast(double num, double den, double rho) {
    return std::fma(-rho, den, num) >= 0.0;
}

// Correctly rounded R*(1 - rho), used as the geometric vigilance bound.
inline double scaledComplement(double r, double rho) {
    return std::fma(-r, rho, r);
}

inline void requireFinite(const Vector& x, const char* what) {
    if (!x.allFinite()) {
        throw DataError(std::string(what) + ": non-finite component");
    }
}

}  // namespace art
