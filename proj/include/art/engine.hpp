// The elementary ART presentation/search/resonance/learning loop and the
// epoch/convergence driver. The engine is generic: each model family plugs
// in through the ModelContract dispatch in contract.hpp.
#pragma once

#include "art/category.hpp"
#include "art/params.hpp"
#include "art/topology.hpp"
#include "art/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace art {

/// A trained (or in-training) unsupervised model.
struct ArtState {
    ModelKind kind = ModelKind::Fuzzy;
    ModelParams params = FuzzyParams{};
    int inputDim = 0;  // original dimension d, before complement coding
    bool complementCoded = false;
    std::vector<Category> categories;
    std::vector<int> clusterOf;  // DVFA: category index -> cluster id
    int clusterCount = 0;
    std::optional<topo::TopoNetwork> topo;  // TopoART only
    std::int64_t presentations = 0;
};

/// Builds an empty state for the given parameters; inputDim is the original
/// data dimension (pre-complement-coding).
ArtState makeState(const ModelParams& params, int inputDim);

struct PresentOutcome {
    int winner = -1;
    bool created = false;
    double match = 1.0;

    /// One-hot F2 activity (winner-takes-all).
    Vector f2Activity(int categoryCount) const {
        Vector y = Vector::Zero(categoryCount);
        y[winner] = 1.0;
        return y;
    }
};

/// Record of one presentation's search, for order/soundness property tests.
struct PresentTrace {
    struct Step {
        int category;
        double activation;
        double match;
        ResonanceVerdict verdict;
    };
    std::vector<Step> steps;
};

/// One sample presentation: computes activations, walks candidates in
/// strictly descending activation (ties to the lowest index), and learns the
/// first resonating category or creates one on exhaustion.
PresentOutcome present(ArtState& state, const Vector& x, PresentTrace* trace = nullptr);

struct FitResult {
    std::vector<int> labels;  // final-epoch winner per sample
    int epochsRun = 0;
    bool converged = false;
};

/// Repeats full-dataset presentations until the LTM is bitwise stable over
/// an epoch or maxEpochs is reached. The presentation order is the given row
/// order, or a seeded shuffle fixed once before epoch 1.
FitResult fit(ArtState& state, const Matrix& data, int maxEpochs,
              std::optional<std::uint64_t> shuffleSeed = std::nullopt);

/// True iff the two states' long-term memory is bitwise identical: same
/// category count, identical category parameters, identical cluster map and
/// topology. Instance counts are compared only for TopoART, where they drive
/// pruning.
bool checkConvergence(const ArtState& prev, const ArtState& cur);

enum class PredictPolicy { Strict, Nearest };

/// Winner's category label (cluster id for DVFA/TopoART); nullopt when the
/// strict policy finds no resonating category. No learning occurs.
std::optional<int> predict(const ArtState& state, const Vector& x,
                           PredictPolicy policy = PredictPolicy::Strict);

/// Cluster id reported for a category (identity except DVFA).
int clusterLabel(const ArtState& state, int category);

}  // namespace art
