#include "art/params.hpp"

#include <cmath>

namespace art {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void FuzzyParams::validate() const {
    require(finite(alpha) && alpha > 0.0, "fuzzy: alpha must be > 0");
    require(finite(beta) && beta > 0.0 && beta <= 1.0, "fuzzy: beta must be in (0, 1]");
    require(finite(rho) && rho >= 0.0 && rho <= 1.0, "fuzzy: rho must be in [0, 1]");
}

void Art1Params::validate() const {
    require(finite(rho) && rho >= 0.0 && rho <= 1.0, "art1: rho must be in [0, 1]");
    require(finite(uncommittedScale) && uncommittedScale > 1.0, "art1: L must be > 1");
}

void DvfaParams::validate() const {
    require(finite(alpha) && alpha > 0.0, "dvfa: alpha must be > 0");
    require(finite(beta) && beta > 0.0 && beta <= 1.0, "dvfa: beta must be in (0, 1]");
    require(finite(rhoLower) && finite(rhoUpper), "dvfa: vigilance must be finite");
    require(0.0 <= rhoLower && rhoLower <= rhoUpper && rhoUpper <= 1.0,
            "dvfa: need 0 <= rho_lb <= rho_ub <= 1");
}

void SphereParams::validate() const {
    require(finite(alpha) && alpha > 0.0, "hypersphere: alpha must be > 0");
    require(finite(beta) && beta > 0.0 && beta <= 1.0, "hypersphere: beta must be in (0, 1]");
    require(finite(rho) && rho >= 0.0 && rho <= 1.0, "hypersphere: rho must be in [0, 1]");
    require(finite(rbar) && rbar > 0.0, "hypersphere: rbar must be > 0");
}

void EllipsoidParams::validate() const {
    require(finite(alpha) && alpha > 0.0, "ellipsoid: alpha must be > 0");
    require(finite(beta) && beta > 0.0 && beta <= 1.0, "ellipsoid: beta must be in (0, 1]");
    require(finite(rho) && rho >= 0.0 && rho <= 1.0, "ellipsoid: rho must be in [0, 1]");
    require(finite(mu) && mu > 0.0 && mu <= 1.0, "ellipsoid: mu must be in (0, 1]");
    require(finite(rbar) && rbar > 0.0, "ellipsoid: rbar must be > 0");
}

void GaussParams::validate() const {
    require(finite(rho) && rho > 0.0 && rho <= 1.0, "gaussian: rho must be in (0, 1]");
    require(finite(sigmaInit) && sigmaInit > 0.0, "gaussian: sigma-init must be > 0");
}

void BayesParams::validate() const {
    require(finite(rho) && rho > 0.0, "bayes: rho must be > 0");
    require(finite(sigmaInit) && sigmaInit > 0.0, "bayes: sigma-init must be > 0");
}

void BayesParams::validateForDim(int dim) const {
    validate();
    require(dim >= 1, "bayes: dimension must be >= 1");
    const double limit = 0.1 * std::pow(rho, 1.0 / static_cast<double>(dim));
    require(sigmaInit * sigmaInit <= limit,
            "bayes: sigma-init^2 must be <= 0.1 * rho^(1/d)");
}

void TopoParams::validate() const {
    require(finite(alpha) && alpha > 0.0, "topoart: alpha must be > 0");
    require(finite(beta2) && beta2 >= 0.0 && beta2 < 1.0, "topoart: beta2 must be in [0, 1)");
    require(finite(rhoA) && rhoA >= 0.0 && rhoA <= 1.0, "topoart: rho must be in [0, 1]");
    require(phi >= 1, "topoart: phi must be >= 1");
    require(tau >= 1, "topoart: tau must be >= 1");
}

void validateParams(const ModelParams& params) {
    std::visit([](const auto& p) { p.validate(); }, params);
}

ModelKind kindOf(const ModelParams& params) {
    struct Visitor {
        ModelKind operator()(const Art1Params&) const { return ModelKind::Art1; }
        ModelKind operator()(const FuzzyParams&) const { return ModelKind::Fuzzy; }
        ModelKind operator()(const DvfaParams&) const { return ModelKind::Dvfa; }
        ModelKind operator()(const SphereParams&) const { return ModelKind::Hypersphere; }
        ModelKind operator()(const EllipsoidParams&) const { return ModelKind::Ellipsoid; }
        ModelKind operator()(const GaussParams&) const { return ModelKind::Gaussian; }
        ModelKind operator()(const BayesParams&) const { return ModelKind::Bayes; }
        ModelKind operator()(const TopoParams&) const { return ModelKind::TopoArt; }
    };
    return std::visit(Visitor{}, params);
}

std::string toString(ModelKind kind) {
    switch (kind) {
        case ModelKind::Art1: return "art1";
        case ModelKind::Fuzzy: return "fuzzy";
        case ModelKind::Dvfa: return "dvfa";
        case ModelKind::Hypersphere: return "hypersphere";
        case ModelKind::Ellipsoid: return "ellipsoid";
        case ModelKind::Gaussian: return "gaussian";
        case ModelKind::Bayes: return "bayes";
        case ModelKind::TopoArt: return "topoart";
    }
    throw ModelError("unknown model kind");
}

ModelKind modelKindFromString(const std::string& name) {
    if (name == "art1") return ModelKind::Art1;
    if (name == "fuzzy") return ModelKind::Fuzzy;
    if (name == "dvfa") return ModelKind::Dvfa;
    if (name == "hypersphere") return ModelKind::Hypersphere;
    if (name == "ellipsoid") return ModelKind::Ellipsoid;
    if (name == "gaussian") return ModelKind::Gaussian;
    if (name == "bayes") return ModelKind::Bayes;
    if (name == "topoart") return ModelKind::TopoArt;
    throw ModelError("unknown model kind: " + name);
}

}  // namespace art
