#include "art/contract.hpp"

#include "art/models/art1.hpp"
#include "art/models/bayesian.hpp"
#include "art/models/dvfa.hpp"
#include "art/models/ellipsoid.hpp"
#include "art/models/fuzzy.hpp"
#include "art/models/gaussian.hpp"
#include "art/models/hypersphere.hpp"

#include <cmath>

namespace art {

namespace {

double dnormOf(const ArtState& state) { return static_cast<double>(state.inputDim); }

ResonanceResult acceptReject(bool pass, double match) {
    return {pass ? ResonanceVerdict::Accept : ResonanceVerdict::Reject, match};
}

class FuzzyContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<FuzzyParams>(state.params);
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            const auto& c = std::get<FuzzyCategory>(state.categories[j].data);
            t[static_cast<Eigen::Index>(j)] = fuzzy::activation(c.w, x, p.alpha);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double rho) const override {
        const auto& c = std::get<FuzzyCategory>(state.categories[j].data);
        const double overlap = fuzzy::matchOverlap(c.w, x);
        const double dnorm = dnormOf(state);
        return acceptReject(fuzzy::vigilancePass(overlap, dnorm, rho), overlap / dnorm);
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<FuzzyParams>(state.params);
        return {FuzzyCategory{fuzzy::learn(std::get<FuzzyCategory>(c.data).w, x, p.beta)},
                c.count};
    }

    Category initCategory(const ArtState&, const Vector& x) const override {
        return {fuzzy::pointCategory(x), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<FuzzyParams>(state.params).rho;
    }
};

class DvfaContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<DvfaParams>(state.params);
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            const auto& c = std::get<FuzzyCategory>(state.categories[j].data);
            t[static_cast<Eigen::Index>(j)] = fuzzy::activation(c.w, x, p.alpha);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double) const override {
        const auto& p = std::get<DvfaParams>(state.params);
        const auto& c = std::get<FuzzyCategory>(state.categories[j].data);
        const double overlap = fuzzy::matchOverlap(c.w, x);
        const double dnorm = dnormOf(state);
        return {dvfa::verdict(overlap, dnorm, p), overlap / dnorm};
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<DvfaParams>(state.params);
        return {FuzzyCategory{fuzzy::learn(std::get<FuzzyCategory>(c.data).w, x, p.beta)},
                c.count};
    }

    Category initCategory(const ArtState&, const Vector& x) const override {
        return {fuzzy::pointCategory(x), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<DvfaParams>(state.params).rhoUpper;
    }
};

class Art1Contract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            t[static_cast<Eigen::Index>(j)] =
                art1::activation(std::get<Art1Category>(state.categories[j].data), x);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double rho) const override {
        const auto& c = std::get<Art1Category>(state.categories[j].data);
        const double overlap = art1::matchOverlap(c, x);
        const double xnorm = x.sum();
        return acceptReject(ratioAtLeast(overlap, xnorm, rho), overlap / xnorm);
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<Art1Params>(state.params);
        return {art1::learn(std::get<Art1Category>(c.data), x, p.uncommittedScale), c.count};
    }

    Category initCategory(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<Art1Params>(state.params);
        return {art1::commit(x, p.uncommittedScale), 1};
    }

    bool competesUncommitted() const override { return true; }

    double uncommittedActivation(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<Art1Params>(state.params);
        return art1::uncommittedActivation(x, p.uncommittedScale, state.inputDim);
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<Art1Params>(state.params).rho;
    }
};

class SphereContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<SphereParams>(state.params);
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            t[static_cast<Eigen::Index>(j)] =
                sphere::activation(std::get<SphereCategory>(state.categories[j].data), x, p);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double rho) const override {
        auto p = std::get<SphereParams>(state.params);
        p.rho = rho;
        const auto& c = std::get<SphereCategory>(state.categories[j].data);
        const double dist = sphere::distance(c, x);
        return acceptReject(sphere::vigilancePass(c, dist, p), sphere::matchValue(c, x, p.rbar));
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<SphereParams>(state.params);
        return {sphere::learn(std::get<SphereCategory>(c.data), x, p.beta), c.count};
    }

    Category initCategory(const ArtState&, const Vector& x) const override {
        return {sphere::pointCategory(x), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<SphereParams>(state.params).rho;
    }
};

class EllipsoidContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<EllipsoidParams>(state.params);
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            t[static_cast<Eigen::Index>(j)] =
                ellipsoid::activation(std::get<EllipsoidCategory>(state.categories[j].data), x, p);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double rho) const override {
        auto p = std::get<EllipsoidParams>(state.params);
        p.rho = rho;
        const auto& c = std::get<EllipsoidCategory>(state.categories[j].data);
        const double dis = ellipsoid::distance(c, x, p.mu);
        return acceptReject(ellipsoid::vigilancePass(c, dis, p), ellipsoid::matchValue(c, x, p));
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<EllipsoidParams>(state.params);
        return {ellipsoid::learn(std::get<EllipsoidCategory>(c.data), x, p), c.count};
    }

    Category initCategory(const ArtState&, const Vector& x) const override {
        return {ellipsoid::pointCategory(x), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<EllipsoidParams>(state.params).rho;
    }
};

class GaussContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        std::int64_t total = 0;
        for (const auto& c : state.categories) {
            total += c.count;
        }
        Vector t(static_cast<Eigen::Index>(state.categories.size()));
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            t[static_cast<Eigen::Index>(j)] =
                gauss::logPosterior(std::get<GaussCategory>(state.categories[j].data),
                                    state.categories[j].count, total, x);
        }
        return t;
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                              double rho) const override {
        const auto& c = std::get<GaussCategory>(state.categories[j].data);
        const double logM = gauss::logMatch(c, x);
        // Match tracking can drive rho to zero or below; the test is then
        // vacuous (M > 0 always).
        const bool pass = rho <= 0.0 || logM >= std::log(rho);
        return acceptReject(pass, std::exp(logM));
    }

    Category learn(const ArtState&, const Category& c, const Vector& x) const override {
        return {gauss::learn(std::get<GaussCategory>(c.data), c.count, x), c.count};
    }

    Category initCategory(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<GaussParams>(state.params);
        return {gauss::pointCategory(x, p.sigmaInit), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<GaussParams>(state.params).rho;
    }
};

class BayesContract : public ModelContract {
public:
    Vector activations(const ArtState& state, const Vector& x) const override {
        std::vector<BayesCategory> cats;
        std::vector<std::int64_t> counts;
        cats.reserve(state.categories.size());
        counts.reserve(state.categories.size());
        for (const auto& c : state.categories) {
            cats.push_back(std::get<BayesCategory>(c.data));
            counts.push_back(c.count);
        }
        return bayes::posteriors(cats, counts, x);
    }

    ResonanceResult resonance(const ArtState& state, int j, const Vector&,
                              double rho) const override {
        const auto& c = std::get<BayesCategory>(state.categories[j].data);
        return acceptReject(bayes::vigilancePass(c, rho), bayes::matchValue(c));
    }

    Category learn(const ArtState& state, const Category& c, const Vector& x) const override {
        const auto& p = std::get<BayesParams>(state.params);
        return {bayes::learn(std::get<BayesCategory>(c.data), c.count, x, p.diagonal), c.count};
    }

    Category initCategory(const ArtState& state, const Vector& x) const override {
        const auto& p = std::get<BayesParams>(state.params);
        return {bayes::pointCategory(x, p.sigmaInit), 1};
    }

    double baselineRho(const ArtState& state) const override {
        return std::get<BayesParams>(state.params).rho;
    }

    bool reversedVigilance() const override { return true; }
};

}  // namespace

const ModelContract& contractFor(ModelKind kind) {
    static const FuzzyContract fuzzyContract;
    static const DvfaContract dvfaContract;
    static const Art1Contract art1Contract;
    static const SphereContract sphereContract;
    static const EllipsoidContract ellipsoidContract;
    static const GaussContract gaussContract;
    static const BayesContract bayesContract;
    switch (kind) {
        case ModelKind::Fuzzy: return fuzzyContract;
        case ModelKind::Dvfa: return dvfaContract;
        case ModelKind::Art1: return art1Contract;
        case ModelKind::Hypersphere: return sphereContract;
        case ModelKind::Ellipsoid: return ellipsoidContract;
        case ModelKind::Gaussian: return gaussContract;
        case ModelKind::Bayes: return bayesContract;
        case ModelKind::TopoArt:
            throw ModelError("TopoART is driven by the topology module, not the contract");
    }
    throw ModelError("unknown model kind");
}

}  // namespace art
