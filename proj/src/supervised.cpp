#include "art/supervised.hpp"

#include "art/contract.hpp"
#include "art/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace art::sfam {

void SfamParams::validate() const {
    validateParams(inner);
    const ModelKind kind = kindOf(inner);
    if (kind == ModelKind::Dvfa || kind == ModelKind::TopoArt) {
        throw ConfigError("sfam: inner model must be a single-vigilance family");
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw ConfigError("sfam: epsilon magnitude must be in (0, 1)");
    }
}

SfamState makeState(const SfamParams& params, int inputDim) {
    params.validate();
    SfamState state;
    state.params = params;
    state.inner = art::makeState(params.inner, inputDim);
    return state;
}

namespace {

// Match tracking shifts vigilance to exclude (MT+) or barely release (MT-)
// the failed hypothesis. For the Bayesian inner model the vigilance
// inequality is reversed, so the shift direction flips.
double trackedRho(double match, MatchTracking mt, double epsilon, bool reversed) {
    const double delta = (mt == MatchTracking::Plus) ? epsilon : -epsilon;
    return reversed ? match - delta : match + delta;
}

}  // namespace

TrainOutcome trainStep(SfamState& state, const Vector& x, int label, TrainTrace* trace) {
    if (label < 0) {
        throw DataError("sfam: labels must be non-negative ids");
    }
    ArtState& inner = state.inner;
    const ModelContract& contract = contractFor(inner.kind);

    auto createMapped = [&]() {
        inner.categories.push_back(contract.initCategory(inner, x));
        ++inner.presentations;
        state.classOf.push_back(label);
        const int j = static_cast<int>(inner.categories.size()) - 1;
        if (trace) {
            trace->steps.push_back({j, 1.0, 0.0, TrainTrace::Action::Created});
        }
        return TrainOutcome{j, true};
    };

    if (inner.categories.empty() && !contract.competesUncommitted()) {
        return createMapped();
    }

    double rho = contract.baselineRho(inner);
    std::vector<char> inhibited(inner.categories.size(), 0);
    const Vector t = contract.activations(inner, x);
    const int uncommittedIndex = static_cast<int>(inner.categories.size());

    while (true) {
        int best = -1;
        for (int j = 0; j < t.size(); ++j) {
            if (!inhibited[static_cast<std::size_t>(j)] && (best < 0 || t[j] > t[best])) {
                best = j;
            }
        }
        if (contract.competesUncommitted()) {
            const double tU = contract.uncommittedActivation(inner, x);
            if (best < 0 || tU > t[best]) {
                best = uncommittedIndex;
            }
        }
        if (best < 0) {
            return createMapped();
        }
        if (best == uncommittedIndex) {
            return createMapped();
        }

        const ResonanceResult rr = contract.resonance(inner, best, x, rho);
        if (rr.verdict != ResonanceVerdict::Accept) {
            if (trace) {
                trace->steps.push_back({best, rr.match, rho, TrainTrace::Action::VigilanceFail});
            }
            inhibited[static_cast<std::size_t>(best)] = 1;
            continue;
        }
        if (state.classOf[static_cast<std::size_t>(best)] == label) {
            Category updated = contract.learn(inner, inner.categories[static_cast<std::size_t>(best)], x);
            updated.count = inner.categories[static_cast<std::size_t>(best)].count + 1;
            inner.categories[static_cast<std::size_t>(best)] = std::move(updated);
            ++inner.presentations;
            if (trace) {
                trace->steps.push_back({best, rr.match, rho, TrainTrace::Action::Learned});
            }
            return {best, false};
        }

        // Wrong class: raise/shift vigilance, inhibit, resume the search.
        rho = trackedRho(rr.match, state.params.mt, state.params.epsilon,
                         contract.reversedVigilance());
        inhibited[static_cast<std::size_t>(best)] = 1;
        if (trace) {
            trace->steps.push_back({best, rr.match, rho, TrainTrace::Action::MatchTracked});
        }
    }
}

FitResult fit(SfamState& state, const Matrix& data, const std::vector<int>& labels, int maxEpochs,
              std::optional<std::uint64_t> shuffleSeed) {
    if (data.rows() < 1) {
        throw DataError("sfam fit: empty dataset");
    }
    if (static_cast<std::size_t>(data.rows()) != labels.size()) {
        throw DataError("sfam fit: label count mismatch");
    }
    if (maxEpochs < 1) {
        throw ConfigError("sfam fit: max epochs must be >= 1");
    }

    std::vector<std::size_t> order(static_cast<std::size_t>(data.rows()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffleSeed) {
        order = prep::shuffleSeeded(order.size(), *shuffleSeed);
    }

    FitResult result;
    for (int epoch = 1; epoch <= maxEpochs; ++epoch) {
        const ArtState before = state.inner;
        const std::vector<int> mapBefore = state.classOf;
        for (std::size_t idx : order) {
            trainStep(state, Vector(data.row(static_cast<Eigen::Index>(idx))), labels[idx]);
        }
        result.epochsRun = epoch;
        if (state.classOf == mapBefore && checkConvergence(before, state.inner)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::optional<int> predict(const SfamState& state, const Vector& x, bool strict) {
    const ArtState& inner = state.inner;
    if (inner.categories.empty()) {
        throw ModelError("sfam predict: untrained state");
    }
    const ModelContract& contract = contractFor(inner.kind);
    const Vector t = contract.activations(inner, x);
    int winner = 0;
    for (int j = 1; j < t.size(); ++j) {
        if (t[j] > t[winner]) {
            winner = j;
        }
    }
    if (strict) {
        const ResonanceResult rr =
            contract.resonance(inner, winner, x, contract.baselineRho(inner));
        if (rr.verdict != ResonanceVerdict::Accept) {
            return std::nullopt;
        }
    }
    return state.classOf[static_cast<std::size_t>(winner)];
}

}  // namespace art::sfam
