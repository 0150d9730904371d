// TopoART: two cascaded Fuzzy-ART modules with instance-count permanence,
// periodic pruning, second-winner edge learning and connected-component
// cluster extraction.
#pragma once

#include "art/params.hpp"
#include "art/types.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace art::topo {

struct TopoCategory {
    Vector w;
    std::int64_t count = 1;
    bool permanent = false;
};

struct TopoModule {
    std::vector<TopoCategory> categories;
    std::set<std::pair<int, int>> edges;  // undirected, stored with first < second
    std::int64_t presentations = 0;       // samples this module has received
    std::int64_t removedCount = 0;        // sum of counts of pruned categories
};

struct TopoNetwork {
    TopoModule a;
    TopoModule b;
};

struct ModuleOutcome {
    int firstWinner = -1;
    int secondWinner = -1;
    bool created = false;
    double match = 1.0;
};

struct PresentResult {
    ModuleOutcome a;
    std::optional<ModuleOutcome> b;  // set when the sample propagated
};

/// One presentation: module A always, module B iff A's resonant category is
/// permanent. Each module runs its cleanup on its own presentation clock.
PresentResult present(TopoNetwork& net, const Vector& x, const TopoParams& params, int inputDim);

/// Removes non-permanent categories with count < phi (and their edges),
/// then promotes categories with count >= phi to permanent.
void cleanup(TopoModule& module, long phi);

/// Connected components over permanent categories; component ids are
/// assigned in order of the smallest member index. Non-permanent categories
/// map to -1.
std::vector<int> clusters(const TopoModule& module);

/// Size-independent activation over permanent nodes only, ignoring
/// vigilance; returns the winner's connected-component cluster id.
int predict(const TopoModule& module, const Vector& x, int inputDim);

}  // namespace art::topo
