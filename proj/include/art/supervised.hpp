// Simplified ARTMAP: one unsupervised module plus a permanent category ->
// class map field, with MT+ / MT- match tracking.
#pragma once

#include "art/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace art::sfam {

enum class MatchTracking { Plus, Minus };

struct SfamParams {
    ModelParams inner;          // any non-DVFA, non-TopoART model family
    MatchTracking mt = MatchTracking::Plus;
    double epsilon = 0.001;     // magnitude; the MT mode fixes the sign

    void validate() const;
};

struct SfamState {
    SfamParams params;
    ArtState inner;
    std::vector<int> classOf;  // category index -> class id, permanent
};

SfamState makeState(const SfamParams& params, int inputDim);

struct TrainOutcome {
    int category = -1;
    bool created = false;
};

/// Search record for the match-tracking soundness property test.
struct TrainTrace {
    enum class Action { Learned, VigilanceFail, MatchTracked, Created };
    struct Step {
        int category;
        double match;
        double rhoAtCheck;
        Action action;
    };
    std::vector<Step> steps;
};

/// One supervised presentation per the elementary ARTMAP dynamics with the
/// label-vector ART_b: vigilance starts at the baseline, a wrong-class
/// resonance triggers match tracking and the search resumes; exhaustion
/// creates a category permanently mapped to the label.
TrainOutcome trainStep(SfamState& state, const Vector& x, int label, TrainTrace* trace = nullptr);

struct FitResult {
    int epochsRun = 0;
    bool converged = false;
};

FitResult fit(SfamState& state, const Matrix& data, const std::vector<int>& labels, int maxEpochs,
              std::optional<std::uint64_t> shuffleSeed = std::nullopt);

/// WTA over committed categories with no vigilance, then the map-field
/// lookup. With strict = true the winner must also pass the baseline
/// vigilance, else nullopt.
std::optional<int> predict(const SfamState& state, const Vector& x, bool strict = false);

}  // namespace art::sfam
