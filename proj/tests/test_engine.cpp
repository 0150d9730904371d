// Engine loop tests: search order, resonance dispatch, epoch driver,
// convergence detection and prediction policies.
#include "art/contract.hpp"
#include "art/engine.hpp"
#include "art/models/fuzzy.hpp"
#include "art/preprocess.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <thread>

using namespace art;

namespace {

ArtState fuzzyState(double rho, double beta = 1.0, double alpha = 0.001) {
    return makeState(FuzzyParams{alpha, beta, rho}, 2);
}

Vector cc(double a, double b) {
    Vector x(2);
    x << a, b;
    return prep::complementCode(x);
}

}  // namespace

TEST_CASE("present on an empty state creates category 0") {
    ArtState state = fuzzyState(0.75);
    const PresentOutcome out = present(state, cc(0.3, 0.7));
    CHECK(out.winner == 0);
    CHECK(out.created);
    CHECK(state.categories.size() == 1);
    CHECK(state.categories[0].count == 1);
    CHECK(out.f2Activity(1)[0] == 1.0);
}

TEST_CASE("present input validation") {
    ArtState state = fuzzyState(0.75);
    CHECK_THROWS_AS(present(state, Vector{}), DataError);
    CHECK_THROWS_AS(present(state, Vector::Zero(3)), DataError);
    Vector bad = cc(0.5, 0.5);
    bad[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(present(state, bad), DataError);
}

TEST_CASE("zero vigilance always accepts the activation winner") {
    ArtState state = fuzzyState(0.0);
    state.categories.push_back({FuzzyCategory{cc(0.1, 0.1)}, 1});
    state.categories.push_back({FuzzyCategory{cc(0.9, 0.9)}, 1});
    REQUIRE(state.categories.size() == 2);

    prep::SplitMix64 rng(3);
    const ModelContract& contract = contractFor(state.kind);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector x = cc(rng.uniform(), rng.uniform());
        const Vector t = contract.activations(state, x);
        const int argmax = t[0] >= t[1] ? 0 : 1;
        const PresentOutcome out = present(state, x);
        CHECK(out.winner == argmax);
        CHECK_FALSE(out.created);
    }
    CHECK(state.categories.size() == 2);
}

TEST_CASE("two-category resonance picks the matching template and leaves it unchanged") {
    ArtState state = fuzzyState(0.95, 1.0, 0.001);
    Vector w1(4), w2(4);
    w1 << 0.1, 0.4, 0.9, 0.6;
    w2 << 0.8, 0.8, 0.2, 0.2;
    state.categories.push_back({FuzzyCategory{w1}, 1});
    state.categories.push_back({FuzzyCategory{w2}, 1});

    Vector x(4);
    x << 0.1, 0.4, 0.9, 0.6;
    const PresentOutcome out = present(state, x);
    CHECK(out.winner == 0);
    CHECK_FALSE(out.created);
    CHECK(out.match == 1.0);
    CHECK(std::get<FuzzyCategory>(state.categories[0].data).w == w1);
    CHECK(state.categories[0].count == 2);
}

TEST_CASE("accepted category activation dominates every rejected candidate") {
    ArtState state = fuzzyState(0.85);
    prep::SplitMix64 rng(23);
    for (int step = 0; step < 300; ++step) {
        const Vector x = cc(rng.uniform(), rng.uniform());
        PresentTrace trace;
        const PresentOutcome out = present(state, x, &trace);
        if (!out.created) {
            for (const auto& s : trace.steps) {
                if (s.verdict == ResonanceVerdict::Reject) {
                    const double acceptedT = trace.steps.back().activation;
                    CHECK(acceptedT <= s.activation);
                }
            }
        }
    }
}

TEST_CASE("fit on a single sample converges in two epochs") {
    ArtState state = fuzzyState(0.75);
    Matrix data(1, 4);
    data << 0.2, 0.6, 0.8, 0.4;
    const FitResult result = fit(state, data, 5);
    CHECK(result.epochsRun == 2);
    CHECK(result.converged);
    CHECK(state.categories.size() == 1);
    CHECK(result.labels == std::vector<int>{0});
}

TEST_CASE("identical samples collapse to one category regardless of order") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        ArtState state = fuzzyState(0.9);
        Matrix data(6, 4);
        for (int r = 0; r < 6; ++r) {
            data.row(r) = cc(0.4, 0.6).transpose();
        }
        const FitResult result = fit(state, data, 10, seed);
        CHECK(state.categories.size() == 1);
        CHECK(result.converged);
    }
}

TEST_CASE("four well-separated pairs become four categories within three epochs") {
    // Hand-traced: each pair box has size 0.04 <= d(1-rho) = 0.1, while any
    // cross-pair match is far below rho = 0.95.
    const double p[4][2] = {{0.05, 0.05}, {0.9, 0.9}, {0.05, 0.9}, {0.9, 0.05}};
    Matrix data(8, 4);
    for (int i = 0; i < 4; ++i) {
        data.row(2 * i) = cc(p[i][0], p[i][1]).transpose();
        data.row(2 * i + 1) = cc(p[i][0] + 0.02, p[i][1] + 0.02).transpose();
    }
    ArtState state = fuzzyState(0.95);
    const FitResult result = fit(state, data, 10);
    CHECK(state.categories.size() == 4);
    CHECK(result.converged);
    CHECK(result.epochsRun <= 3);

    // Counts sum to the number of learned presentations.
    std::int64_t total = 0;
    for (const auto& c : state.categories) {
        total += c.count;
    }
    CHECK(total == state.presentations);
}

TEST_CASE("fit error paths") {
    ArtState state = fuzzyState(0.5);
    CHECK_THROWS_AS(fit(state, Matrix(0, 4), 5), DataError);
    CHECK_THROWS_AS(fit(state, Matrix::Constant(2, 3, 0.5), 5), DataError);
    CHECK_THROWS_AS(fit(state, Matrix::Constant(2, 4, 0.5), 0), ConfigError);
}

TEST_CASE("check_convergence is bitwise") {
    ArtState state = fuzzyState(0.75);
    present(state, cc(0.3, 0.4));
    CHECK(checkConvergence(state, state));

    ArtState nudged = state;
    std::get<FuzzyCategory>(nudged.categories[0].data).w[1] += 1e-12;
    CHECK_FALSE(checkConvergence(state, nudged));

    ArtState other = makeState(FuzzyParams{0.001, 1.0, 0.5}, 3);
    CHECK_THROWS_AS(checkConvergence(state, other), ModelError);

    SUBCASE("instance counts do not block convergence") {
        ArtState recounted = state;
        recounted.categories[0].count += 5;
        CHECK(checkConvergence(state, recounted));
    }

    SUBCASE("topology graphs participate in the comparison") {
        TopoParams tp;
        ArtState a = makeState(tp, 2);
        ArtState b = a;
        a.topo->a.categories.push_back({cc(0.1, 0.1), 1, true});
        b.topo->a.categories.push_back({cc(0.1, 0.1), 1, true});
        CHECK(checkConvergence(a, b));
        b.topo->a.categories.push_back({cc(0.9, 0.9), 1, true});
        a.topo->a.categories.push_back({cc(0.9, 0.9), 1, true});
        b.topo->a.edges.insert({0, 1});
        CHECK_FALSE(checkConvergence(a, b));
    }
}

TEST_CASE("predict policies") {
    ArtState state = fuzzyState(0.9);
    const Vector a = cc(0.1, 0.1);
    const Vector b = cc(0.9, 0.9);
    present(state, a);
    present(state, b);

    CHECK(predict(state, a, PredictPolicy::Strict) == 0);
    CHECK(predict(state, b, PredictPolicy::Strict) == 1);

    // Far outside both vigilance regions: strict rejects, nearest assigns.
    const Vector far = cc(0.5, 0.5);
    CHECK_FALSE(predict(state, far, PredictPolicy::Strict).has_value());
    CHECK(predict(state, far, PredictPolicy::Nearest).has_value());

    ArtState untrained = fuzzyState(0.9);
    CHECK_THROWS_AS(predict(untrained, a), ModelError);
}

TEST_CASE("fit is deterministic bit-for-bit") {
    const auto [raw, labels] = support::blobs(
        (Matrix(3, 2) << 0.2, 0.2, 0.8, 0.2, 0.5, 0.8).finished(), 40, 0.08, 99);
    const Matrix data = prep::complementCodeRows(raw);

    ArtState s1 = fuzzyState(0.8);
    ArtState s2 = fuzzyState(0.8);
    const FitResult r1 = fit(s1, data, 20, 7);
    const FitResult r2 = fit(s2, data, 20, 7);
    CHECK(r1.labels == r2.labels);
    CHECK(r1.epochsRun == r2.epochsRun);
    CHECK(checkConvergence(s1, s2));
}

TEST_CASE("trained states serve concurrent predictions") {
    const auto [raw, labels] = support::blobs(
        (Matrix(2, 2) << 0.25, 0.25, 0.75, 0.75).finished(), 50, 0.1, 5);
    const Matrix data = prep::complementCodeRows(raw);
    ArtState state = fuzzyState(0.7);
    fit(state, data, 20);

    std::vector<int> fromA(static_cast<std::size_t>(data.rows()));
    std::vector<int> fromB(static_cast<std::size_t>(data.rows()));
    auto worker = [&](std::vector<int>& out) {
        for (Eigen::Index r = 0; r < data.rows(); ++r) {
            out[static_cast<std::size_t>(r)] =
                predict(state, Vector(data.row(r)), PredictPolicy::Nearest).value();
        }
    };
    std::thread t1(worker, std::ref(fromA));
    std::thread t2(worker, std::ref(fromB));
    t1.join();
    t2.join();
    CHECK(fromA == fromB);
}

TEST_CASE("fuzzy size bound and monotonicity over full runs") {
    // After every accepted learn: every component non-increasing and
    // d - |w| <= d(1 - rho), checked with the engine's sign-exact predicate.
    for (double rho : {0.5, 0.75, 0.9}) {
        ArtState state = fuzzyState(rho);
        prep::SplitMix64 rng(101 + static_cast<std::uint64_t>(rho * 100));
        std::vector<Vector> previous;
        for (int step = 0; step < 400; ++step) {
            const Vector x = cc(rng.uniform(), rng.uniform());
            previous.clear();
            for (const auto& c : state.categories) {
                previous.push_back(std::get<FuzzyCategory>(c.data).w);
            }
            const PresentOutcome out = present(state, x);
            for (std::size_t j = 0; j < previous.size(); ++j) {
                const Vector& now = std::get<FuzzyCategory>(state.categories[j].data).w;
                for (Eigen::Index i = 0; i < now.size(); ++i) {
                    CHECK(now[i] <= previous[j][i]);
                }
            }
            if (!out.created) {
                const Vector& w = std::get<FuzzyCategory>(state.categories[out.winner].data).w;
                CHECK(fuzzy::vigilancePass(w.sum(), 2.0, rho));  // == size bound, exactly
            }
        }
    }
}

TEST_CASE("dvfa linking and cluster creation") {
    DvfaParams p;
    p.rhoUpper = 0.95;
    p.rhoLower = 0.4;
    ArtState state = makeState(p, 2);

    present(state, cc(0.1, 0.1));  // creates c0, cluster 0
    CHECK(state.clusterOf == std::vector<int>{0});

    // M vs c0 is 0.9: bracketed -> new point category linked to cluster 0.
    const PresentOutcome linked = present(state, cc(0.2, 0.2));
    CHECK(linked.created);
    CHECK(linked.winner == 1);
    CHECK(state.clusterOf == std::vector<int>{0, 0});
    CHECK(std::get<FuzzyCategory>(state.categories[1].data).w == cc(0.2, 0.2));

    // M = 0.3 and 0.2 against the two categories: both reject -> new cluster.
    const PresentOutcome fresh = present(state, cc(0.9, 0.9));
    CHECK(fresh.created);
    CHECK(state.clusterOf == std::vector<int>{0, 0, 1});
    CHECK(state.clusterCount == 2);

    CHECK(predict(state, cc(0.18, 0.22), PredictPolicy::Nearest) == 0);
    CHECK(predict(state, cc(0.88, 0.9), PredictPolicy::Nearest) == 1);
}

TEST_CASE("dvfa cluster associations are permanent") {
    DvfaParams p;
    p.rhoUpper = 0.9;
    p.rhoLower = 0.5;
    ArtState state = makeState(p, 2);
    prep::SplitMix64 rng(61);
    std::vector<int> snapshot;
    for (int step = 0; step < 400; ++step) {
        present(state, cc(rng.uniform(), rng.uniform()));
        REQUIRE(state.clusterOf.size() == state.categories.size());
        for (std::size_t j = 0; j < snapshot.size(); ++j) {
            CHECK(state.clusterOf[j] == snapshot[j]);
        }
        snapshot = state.clusterOf;
    }
    CHECK(state.clusterCount >= 1);
}

TEST_CASE("art1 uncommitted node competes and can outrank a passing category") {
    Art1Params p{0.2, 2.0};
    ArtState state = makeState(p, 3);
    Vector first(3);
    first << 1, 0, 0;
    present(state, first);
    REQUIRE(state.categories.size() == 1);

    // T_committed = 1, T_uncommitted = 1.5; the uncommitted node wins even
    // though the committed one would pass rho = 0.2.
    Vector x(3);
    x << 1, 1, 1;
    const PresentOutcome out = present(state, x);
    CHECK(out.created);
    CHECK(state.categories.size() == 2);
    const auto& fresh = std::get<Art1Category>(state.categories[1].data);
    CHECK(fresh.topDown == x);
}
