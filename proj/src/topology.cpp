#include "art/topology.hpp"

#include "art/models/fuzzy.hpp"

#include <algorithm>
#include <numeric>

namespace art::topo {

namespace {

// Fuzzy ART search with a second winner: both winners must pass vigilance.
ModuleOutcome moduleStep(TopoModule& module, const Vector& x, double rho, const TopoParams& params,
                         int inputDim) {
    const double dnorm = static_cast<double>(inputDim);
    ModuleOutcome out;

    const std::size_t n = module.categories.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Vector t(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        t[static_cast<Eigen::Index>(j)] =
            fuzzy::activation(module.categories[j].w, x, params.alpha);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t[a] > t[b]; });

    for (int j : order) {
        const double overlap = fuzzy::matchOverlap(module.categories[static_cast<std::size_t>(j)].w, x);
        if (!fuzzy::vigilancePass(overlap, dnorm, rho)) {
            continue;
        }
        if (out.firstWinner < 0) {
            out.firstWinner = j;
            out.match = overlap / dnorm;
        } else {
            out.secondWinner = j;
            break;
        }
    }

    if (out.firstWinner < 0) {
        module.categories.push_back({x, 1, false});
        out.firstWinner = static_cast<int>(module.categories.size()) - 1;
        out.created = true;
        out.match = 1.0;
        return out;
    }

    TopoCategory& first = module.categories[static_cast<std::size_t>(out.firstWinner)];
    first.w = fuzzy::learn(first.w, x, 1.0);
    first.count += 1;
    if (out.secondWinner >= 0) {
        TopoCategory& second = module.categories[static_cast<std::size_t>(out.secondWinner)];
        if (params.beta2 > 0.0) {
            second.w = fuzzy::learn(second.w, x, params.beta2);
        }
        module.edges.insert({std::min(out.firstWinner, out.secondWinner),
                             std::max(out.firstWinner, out.secondWinner)});
    }
    return out;
}

void tick(TopoModule& module, const TopoParams& params) {
    module.presentations += 1;
    if (module.presentations % params.tau == 0) {
        cleanup(module, params.phi);
    }
}

}  // namespace

PresentResult present(TopoNetwork& net, const Vector& x, const TopoParams& params, int inputDim) {
    PresentResult result;
    result.a = moduleStep(net.a, x, params.rhoA, params, inputDim);

    const bool winnerPermanent =
        !result.a.created &&
        net.a.categories[static_cast<std::size_t>(result.a.firstWinner)].permanent;
    if (winnerPermanent) {
        result.b = moduleStep(net.b, x, params.rhoB(), params, inputDim);
        tick(net.b, params);
    }
    tick(net.a, params);
    return result;
}

void cleanup(TopoModule& module, long phi) {
    for (TopoCategory& c : module.categories) {
        if (c.count >= phi) {
            c.permanent = true;
        }
    }

    std::vector<int> remap(module.categories.size(), -1);
    std::vector<TopoCategory> kept;
    kept.reserve(module.categories.size());
    for (std::size_t j = 0; j < module.categories.size(); ++j) {
        if (module.categories[j].permanent) {
            remap[j] = static_cast<int>(kept.size());
            kept.push_back(std::move(module.categories[j]));
        } else {
            module.removedCount += module.categories[j].count;
        }
    }

    std::set<std::pair<int, int>> edges;
    for (const auto& [u, v] : module.edges) {
        const int nu = remap[static_cast<std::size_t>(u)];
        const int nv = remap[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) {
            edges.insert({std::min(nu, nv), std::max(nu, nv)});
        }
    }
    module.categories = std::move(kept);
    module.edges = std::move(edges);
}

std::vector<int> clusters(const TopoModule& module) {
    const std::size_t n = module.categories.size();
    std::vector<int> component(n, -1);

    // Union-find over permanent categories only.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    for (const auto& [u, v] : module.edges) {
        if (module.categories[static_cast<std::size_t>(u)].permanent &&
            module.categories[static_cast<std::size_t>(v)].permanent) {
            parent[static_cast<std::size_t>(find(u))] = find(v);
        }
    }

    // Ids in order of the smallest member index.
    int next = 0;
    std::vector<int> idOfRoot(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
        if (!module.categories[j].permanent) {
            continue;
        }
        const int root = find(static_cast<int>(j));
        if (idOfRoot[static_cast<std::size_t>(root)] < 0) {
            idOfRoot[static_cast<std::size_t>(root)] = next++;
        }
        component[j] = idOfRoot[static_cast<std::size_t>(root)];
    }
    return component;
}

int predict(const TopoModule& module, const Vector& x, int inputDim) {
    const double dnorm = static_cast<double>(inputDim);
    int winner = -1;
    double best = 0.0;
    for (std::size_t j = 0; j < module.categories.size(); ++j) {
        if (!module.categories[j].permanent) {
            continue;
        }
        const Vector& w = module.categories[j].w;
        // Size-independent activation: 1 - |(x ^ w) - w| / |x|.
        const double t = 1.0 - (x.cwiseMin(w) - w).cwiseAbs().sum() / dnorm;
        if (winner < 0 || t > best) {
            winner = static_cast<int>(j);
            best = t;
        }
    }
    if (winner < 0) {
        throw ModelError("topoart predict: no permanent categories");
    }
    return clusters(module)[static_cast<std::size_t>(winner)];
}

}  // namespace art::topo
