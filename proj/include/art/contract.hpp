// The per-model category contract the engine is parameterized by. Activation
// is a whole-state function because the Bayesian posterior normalizes over
// the full category list; the other models map a per-category choice
// function. All operations are pure — mutation is confined to the engine.
#pragma once

#include "art/engine.hpp"
#include "art/models/dvfa.hpp"

namespace art {

struct ResonanceResult {
    ResonanceVerdict verdict = ResonanceVerdict::Reject;
    double match = 0.0;
};

class ModelContract {
public:
    virtual ~ModelContract() = default;

    /// Activation T_j for every committed category.
    virtual Vector activations(const ArtState& state, const Vector& x) const = 0;

    /// Vigilance verdict and match value for candidate j; rho is passed
    /// explicitly so supervised match tracking can override the baseline.
    virtual ResonanceResult resonance(const ArtState& state, int j, const Vector& x,
                                      double rho) const = 0;

    /// Updated category after learning x (count is bumped by the engine).
    virtual Category learn(const ArtState& state, const Category& c, const Vector& x) const = 0;

    /// Fresh category encoding x.
    virtual Category initCategory(const ArtState& state, const Vector& x) const = 0;

    /// ART 1 keeps one uncommitted node in the competition; everyone else
    /// creates on exhaustion.
    virtual bool competesUncommitted() const { return false; }

    /// Activation of the virtual uncommitted node (ART 1 only).
    virtual double uncommittedActivation(const ArtState&, const Vector&) const { return 0.0; }

    /// Baseline vigilance from the state's parameter record.
    virtual double baselineRho(const ArtState& state) const = 0;

    /// True when resonance requires match <= rho instead of >= (Bayesian).
    virtual bool reversedVigilance() const { return false; }
};

/// The contract singleton for a model family. TopoART is driven by the
/// topology module, not through this dispatch.
const ModelContract& contractFor(ModelKind kind);

}  // namespace art
