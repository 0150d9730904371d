#include "art/engine.hpp"

#include "art/contract.hpp"
#include "art/models/art1.hpp"
#include "art/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

namespace art {

namespace {

Eigen::Index expectedSampleSize(const ArtState& state) {
    return state.complementCoded ? 2 * state.inputDim : state.inputDim;
}

void validateSample(const ArtState& state, const Vector& x) {
    if (x.size() == 0) {
        throw DataError("present: empty sample");
    }
    if (x.size() != expectedSampleSize(state)) {
        throw DataError("present: dimension mismatch");
    }
    requireFinite(x, "present");
    if (state.kind == ModelKind::Art1) {
        art1::requireBinary(x);
    }
    if (state.complementCoded && x.sum() == 0.0) {
        throw DataError("present: zero-norm sample");
    }
}

// Candidate order: strictly descending activation, ties to the lowest index.
std::vector<int> searchOrder(const Vector& t) {
    std::vector<int> order(static_cast<std::size_t>(t.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t[a] > t[b]; });
    return order;
}

// Create-on-exhaustion; DVFA opens a brand-new cluster for the category.
PresentOutcome createCategory(ArtState& state, const ModelContract& contract, const Vector& x) {
    state.categories.push_back(contract.initCategory(state, x));
    const int j = static_cast<int>(state.categories.size()) - 1;
    if (state.kind == ModelKind::Dvfa) {
        state.clusterOf.push_back(state.clusterCount);
        ++state.clusterCount;
    }
    const double match = contract.resonance(state, j, x, contract.baselineRho(state)).match;
    return {j, true, match};
}

bool bitEqual(const Vector& a, const Vector& b) {
    return a.size() == b.size() &&
           (a.size() == 0 ||
            std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) == 0);
}

bool bitEqual(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a.size() == 0 ||
            std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) == 0);
}

bool categoryEqual(const CategoryData& a, const CategoryData& b) {
    if (a.index() != b.index()) {
        return false;
    }
    struct Visitor {
        const CategoryData& other;
        bool operator()(const FuzzyCategory& c) const {
            return bitEqual(c.w, std::get<FuzzyCategory>(other).w);
        }
        bool operator()(const Art1Category& c) const {
            const auto& o = std::get<Art1Category>(other);
            return bitEqual(c.topDown, o.topDown) && bitEqual(c.bottomUp, o.bottomUp);
        }
        bool operator()(const SphereCategory& c) const {
            const auto& o = std::get<SphereCategory>(other);
            return bitEqual(c.center, o.center) &&
                   std::bit_cast<std::uint64_t>(c.radius) == std::bit_cast<std::uint64_t>(o.radius);
        }
        bool operator()(const EllipsoidCategory& c) const {
            const auto& o = std::get<EllipsoidCategory>(other);
            return bitEqual(c.center, o.center) && bitEqual(c.axis, o.axis) &&
                   std::bit_cast<std::uint64_t>(c.radius) == std::bit_cast<std::uint64_t>(o.radius);
        }
        bool operator()(const GaussCategory& c) const {
            const auto& o = std::get<GaussCategory>(other);
            return bitEqual(c.mean, o.mean) && bitEqual(c.sigma, o.sigma);
        }
        bool operator()(const BayesCategory& c) const {
            const auto& o = std::get<BayesCategory>(other);
            return bitEqual(c.mean, o.mean) && bitEqual(c.cov, o.cov);
        }
    };
    return std::visit(Visitor{b}, a);
}

bool moduleEqual(const topo::TopoModule& a, const topo::TopoModule& b) {
    if (a.categories.size() != b.categories.size() || a.edges != b.edges) {
        return false;
    }
    for (std::size_t i = 0; i < a.categories.size(); ++i) {
        // Counters are functional LTM in TopoART: they drive pruning.
        if (!bitEqual(a.categories[i].w, b.categories[i].w) ||
            a.categories[i].count != b.categories[i].count ||
            a.categories[i].permanent != b.categories[i].permanent) {
            return false;
        }
    }
    return true;
}

}  // namespace

ArtState makeState(const ModelParams& params, int inputDim) {
    if (inputDim < 1) {
        throw ConfigError("makeState: input dimension must be >= 1");
    }
    validateParams(params);
    ArtState state;
    state.kind = kindOf(params);
    state.params = params;
    state.inputDim = inputDim;
    state.complementCoded = usesComplementCoding(state.kind);
    if (state.kind == ModelKind::Bayes) {
        std::get<BayesParams>(params).validateForDim(inputDim);
    }
    if (state.kind == ModelKind::TopoArt) {
        state.topo.emplace();
    }
    return state;
}

PresentOutcome present(ArtState& state, const Vector& x, PresentTrace* trace) {
    validateSample(state, x);

    if (state.kind == ModelKind::TopoArt) {
        const auto& p = std::get<TopoParams>(state.params);
        const topo::PresentResult res = topo::present(*state.topo, x, p, state.inputDim);
        ++state.presentations;
        return {res.a.firstWinner, res.a.created, res.a.match};
    }

    const ModelContract& contract = contractFor(state.kind);
    ++state.presentations;

    if (state.categories.empty() && !contract.competesUncommitted()) {
        return createCategory(state, contract, x);
    }

    const double rho = contract.baselineRho(state);
    const Vector t = contract.activations(state, x);
    std::vector<int> order = searchOrder(t);

    const int uncommittedIndex = static_cast<int>(state.categories.size());
    if (contract.competesUncommitted()) {
        // The uncommitted node joins the competition; on a tie the committed
        // (lower) index wins, so it is inserted after equal activations.
        const double tU = contract.uncommittedActivation(state, x);
        auto pos = std::find_if(order.begin(), order.end(), [&](int j) { return t[j] < tU; });
        order.insert(pos, uncommittedIndex);
    }

    for (int j : order) {
        if (j == uncommittedIndex && contract.competesUncommitted()) {
            // Uncommitted nodes always satisfy the match criterion.
            return createCategory(state, contract, x);
        }
        const ResonanceResult rr = contract.resonance(state, j, x, rho);
        if (trace) {
            trace->steps.push_back({j, t[j], rr.match, rr.verdict});
        }
        switch (rr.verdict) {
            case ResonanceVerdict::Accept: {
                Category updated = contract.learn(state, state.categories[j], x);
                updated.count = state.categories[j].count + 1;
                state.categories[static_cast<std::size_t>(j)] = std::move(updated);
                return {j, false, rr.match};
            }
            case ResonanceVerdict::AcceptAsNewLinked: {
                state.categories.push_back(contract.initCategory(state, x));
                state.clusterOf.push_back(state.clusterOf[static_cast<std::size_t>(j)]);
                const int created = static_cast<int>(state.categories.size()) - 1;
                return {created, true, rr.match};
            }
            case ResonanceVerdict::Reject:
                break;
        }
    }
    return createCategory(state, contract, x);
}

FitResult fit(ArtState& state, const Matrix& data, int maxEpochs,
              std::optional<std::uint64_t> shuffleSeed) {
    if (data.rows() < 1) {
        throw DataError("fit: empty dataset");
    }
    if (maxEpochs < 1) {
        throw ConfigError("fit: max epochs must be >= 1");
    }
    if (data.cols() != expectedSampleSize(state)) {
        throw DataError("fit: dataset dimension mismatch");
    }

    std::vector<std::size_t> order(static_cast<std::size_t>(data.rows()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffleSeed) {
        order = prep::shuffleSeeded(order.size(), *shuffleSeed);
    }

    FitResult result;
    result.labels.assign(static_cast<std::size_t>(data.rows()), -1);
    for (int epoch = 1; epoch <= maxEpochs; ++epoch) {
        const ArtState before = state;
        for (std::size_t idx : order) {
            const PresentOutcome out = present(state, Vector(data.row(static_cast<Eigen::Index>(idx))));
            result.labels[idx] = out.winner;
        }
        result.epochsRun = epoch;
        if (checkConvergence(before, state)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

bool checkConvergence(const ArtState& prev, const ArtState& cur) {
    if (prev.kind != cur.kind) {
        throw ModelError("check convergence: model-kind mismatch");
    }
    if (prev.inputDim != cur.inputDim) {
        throw ModelError("check convergence: dimension mismatch");
    }
    if (prev.kind == ModelKind::TopoArt) {
        return moduleEqual(prev.topo->a, cur.topo->a) && moduleEqual(prev.topo->b, cur.topo->b);
    }
    if (prev.categories.size() != cur.categories.size()) {
        return false;
    }
    for (std::size_t i = 0; i < prev.categories.size(); ++i) {
        if (!categoryEqual(prev.categories[i].data, cur.categories[i].data)) {
            return false;
        }
    }
    return prev.clusterOf == cur.clusterOf && prev.clusterCount == cur.clusterCount;
}

int clusterLabel(const ArtState& state, int category) {
    if (state.kind == ModelKind::Dvfa) {
        return state.clusterOf[static_cast<std::size_t>(category)];
    }
    return category;
}

std::optional<int> predict(const ArtState& state, const Vector& x, PredictPolicy policy) {
    if (state.kind == ModelKind::TopoArt) {
        validateSample(state, x);
        // Module B carries the refined clustering; the TopoART prediction
        // rule ignores vigilance, so the policy has no effect here.
        return topo::predict(state.topo->b, x, state.inputDim);
    }
    if (state.categories.empty()) {
        throw ModelError("predict: untrained state");
    }
    validateSample(state, x);

    const ModelContract& contract = contractFor(state.kind);
    const Vector t = contract.activations(state, x);
    int winner = 0;
    for (int j = 1; j < t.size(); ++j) {
        if (t[j] > t[winner]) {
            winner = j;
        }
    }
    if (policy == PredictPolicy::Nearest) {
        return clusterLabel(state, winner);
    }
    const ResonanceResult rr = contract.resonance(state, winner, x, contract.baselineRho(state));
    if (rr.verdict == ResonanceVerdict::Reject) {
        return std::nullopt;
    }
    return clusterLabel(state, winner);
}

}  // namespace art
