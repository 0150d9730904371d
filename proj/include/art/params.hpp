// Hyperparameter records for every model family. Each record validates its
// own constraints; validation failures throw ConfigError before any state is
// touched.
#pragma once

#include "art/types.hpp"

#include <cmath>
#include <variant>

namespace art {

struct FuzzyParams {
    double alpha = 0.001;  // choice parameter, > 0
    double beta = 1.0;     // learning rate, (0, 1]
    double rho = 0.75;     // vigilance, [0, 1]

    void validate() const;
};

struct Art1Params {
    double rho = 0.75;  // vigilance, [0, 1]
    double uncommittedScale = 2.0;  // the ART 1 "L" parameter, > 1

    void validate() const;
};

struct DvfaParams {
    double alpha = 0.001;
    double beta = 1.0;
    double rhoUpper = 0.85;  // quantization vigilance
    double rhoLower = 0.55;  // cluster-similarity vigilance, <= rhoUpper

    void validate() const;
};

struct SphereParams {
    double alpha = 0.001;
    double beta = 1.0;
    double rho = 0.6;
    double rbar = 0.0;  // radial extent; <= 0 means "resolve from data before fit"

    void validate() const;  // requires a resolved (positive) rbar
};

struct EllipsoidParams {
    double alpha = 0.001;
    double beta = 1.0;
    double rho = 0.6;
    double mu = 0.5;   // major/minor axis ratio, (0, 1]
    double rbar = 0.0; // <= 0 means "resolve from data before fit"
    // Published formulations differ on whether the axis direction uses the
    // centroid before or after the second sample's update; default is post-update.
    bool axisFromPreUpdateCenter = false;

    void validate() const;
};

struct GaussParams {
    double rho = 0.5;        // match floor, (0, 1]
    double sigmaInit = 0.5;  // isotropic initial standard deviation, > 0

    void validate() const;
};

struct BayesParams {
    double rho = 1e-3;       // maximum category hyper-volume (det bound), > 0
    double sigmaInit = 0.1;  // initial standard deviation, > 0
    bool diagonal = false;   // restrict covariance updates to the diagonal

    void validate() const;
    // sigmaInit^2 must be well below rho^(1/d); needs the input dimension.
    void validateForDim(int dim) const;
};

struct TopoParams {
    double alpha = 0.001;
    double beta2 = 0.6;   // second-winner learning rate, [0, 1)
    double rhoA = 0.9;    // module A vigilance
    long phi = 5;         // permanence threshold, >= 1
    long tau = 100;       // cleanup period in presentations, >= 1

    // Module B's vigilance is derived, never set directly.
    double rhoB() const { return (rhoA + 1.0) / 2.0; }

    void validate() const;
};

using ModelParams = std::variant<Art1Params, FuzzyParams, DvfaParams, SphereParams,
                                 EllipsoidParams, GaussParams, BayesParams, TopoParams>;

void validateParams(const ModelParams& params);
ModelKind kindOf(const ModelParams& params);

}  // namespace art
