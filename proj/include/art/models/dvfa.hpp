// Dual-vigilance Fuzzy ART: the category math is Fuzzy ART's; only the
// resonance verdict differs (two thresholds, three outcomes).
#pragma once

#include "art/models/fuzzy.hpp"
#include "art/params.hpp"

namespace art::dvfa {

/// M >= rhoUpper -> Accept; rhoLower <= M < rhoUpper -> AcceptAsNewLinked;
/// M < rhoLower -> Reject.
inline ResonanceVerdict verdict(double overlap, double dnorm, const DvfaParams& p) {
    if (fuzzy::vigilancePass(overlap, dnorm, p.rhoUpper)) {
        return ResonanceVerdict::Accept;
    }
    if (fuzzy::vigilancePass(overlap, dnorm, p.rhoLower)) {
        return ResonanceVerdict::AcceptAsNewLinked;
    }
    return ResonanceVerdict::Reject;
}

}  // namespace art::dvfa
