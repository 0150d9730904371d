// Gaussian ART and Bayesian ART tests with high-precision oracles for the
// log-domain arithmetic.
#include "art/contract.hpp"
#include "art/engine.hpp"
#include "art/models/bayesian.hpp"
#include "art/models/gaussian.hpp"
#include "art/preprocess.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace art;
using oracle::Real50;
using oracle::toDouble;

namespace {

Vector vec1(double a) {
    Vector v(1);
    v << a;
    return v;
}

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("gaussian activation follows the MAP criterion") {
    SUBCASE("log-posterior difference in closed form") {
        const GaussCategory c1{vec1(0.0), vec1(0.5)};
        const GaussCategory c2{vec1(1.0), vec1(0.5)};
        const Vector x = vec1(0.2);
        const double diff = gauss::logPosterior(c1, 1, 2, x) - gauss::logPosterior(c2, 1, 2, x);
        // (0.8^2 - 0.2^2) / (2 * 0.25) = 1.2 with equal priors and sigmas.
        const Real50 expected =
            (Real50("0.8") * Real50("0.8") - Real50("0.2") * Real50("0.2")) / (2 * Real50("0.25"));
        CHECK(diff == doctest::Approx(toDouble(expected)).epsilon(1e-12));
    }

    SUBCASE("sample at a mean wins under symmetry") {
        GaussParams p;
        ArtState state = makeState(p, 2);
        state.categories.push_back({GaussCategory{vec2(0.2, 0.2), vec2(0.3, 0.3)}, 1});
        state.categories.push_back({GaussCategory{vec2(0.8, 0.8), vec2(0.3, 0.3)}, 1});
        const Vector t = contractFor(state.kind).activations(state, vec2(0.8, 0.8));
        CHECK(t[1] > t[0]);
    }

    SUBCASE("single category always wins") {
        GaussParams p;
        ArtState state = makeState(p, 1);
        present(state, vec1(0.5));
        CHECK(predict(state, vec1(0.0), PredictPolicy::Nearest) == 0);
        CHECK(predict(state, vec1(1.0), PredictPolicy::Nearest) == 0);
    }
}

TEST_CASE("gaussian match") {
    const GaussCategory c{vec2(0.4, 0.6), vec2(0.1, 0.2)};

    SUBCASE("exact mean gives M = 1") {
        CHECK(gauss::logMatch(c, vec2(0.4, 0.6)) == 0.0);
    }

    SUBCASE("one-sigma offset per dimension gives e^-1") {
        const double logM = gauss::logMatch(c, vec2(0.5, 0.8));
        CHECK(std::exp(logM) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    }

    SUBCASE("rho = 1 resonates only at the exact mean") {
        GaussParams p;
        p.rho = 1.0;
        ArtState state = makeState(p, 2);
        state.categories.push_back({c, 1});
        const auto& contract = contractFor(state.kind);
        CHECK(contract.resonance(state, 0, vec2(0.4, 0.6), 1.0).verdict ==
              ResonanceVerdict::Accept);
        CHECK(contract.resonance(state, 0, vec2(0.41, 0.6), 1.0).verdict ==
              ResonanceVerdict::Reject);
    }
}

TEST_CASE("gaussian learning recursions") {
    SUBCASE("second identical sample shrinks sigma by the stated amount") {
        const GaussCategory fresh = gauss::pointCategory(vec2(0.3, 0.7), 0.5);
        const GaussCategory updated = gauss::learn(fresh, 1, vec2(0.3, 0.7));
        CHECK(updated.mean == fresh.mean);
        // sigma'^2 = (1 - 1/2) * 0.25 = 0.125 per feature.
        CHECK(updated.sigma[0] * updated.sigma[0] == doctest::Approx(0.125).epsilon(1e-15));
        CHECK(updated.sigma[1] == updated.sigma[0]);
    }

    SUBCASE("constant stream contracts sigma monotonically") {
        GaussCategory c = gauss::pointCategory(vec1(0.5), 0.4);
        double prev = c.sigma[0];
        for (std::int64_t n = 1; n <= 200; ++n) {
            c = gauss::learn(c, n, vec1(0.5));
            CHECK(c.sigma[0] < prev);
            prev = c.sigma[0];
        }
        CHECK(c.sigma[0] < 0.4 / std::sqrt(100.0));
    }

    SUBCASE("recursive mean equals the batch mean within 1e-12") {
        prep::SplitMix64 rng(55);
        GaussParams p;
        p.rho = 0.3;
        p.sigmaInit = 0.3;
        ArtState state = makeState(p, 2);
        std::map<int, std::vector<Vector>> assigned;
        for (int step = 0; step < 300; ++step) {
            const Vector x = vec2(rng.uniform(), rng.uniform());
            const PresentOutcome out = present(state, x);
            assigned[out.winner].push_back(x);
        }
        std::int64_t totalCount = 0;
        for (const auto& [j, samples] : assigned) {
            Real50 sx = 0, sy = 0;
            for (const Vector& s : samples) {
                sx += Real50(s[0]);
                sy += Real50(s[1]);
            }
            const auto& c = std::get<GaussCategory>(state.categories[static_cast<std::size_t>(j)].data);
            CHECK(std::abs(c.mean[0] - toDouble(sx / samples.size())) < 1e-12);
            CHECK(std::abs(c.mean[1] - toDouble(sy / samples.size())) < 1e-12);
            CHECK(state.categories[static_cast<std::size_t>(j)].count ==
                  static_cast<std::int64_t>(samples.size()));
            totalCount += state.categories[static_cast<std::size_t>(j)].count;
        }
        CHECK(totalCount == state.presentations);
    }
}

TEST_CASE("bayesian posteriors") {
    SUBCASE("single category normalizes to one") {
        const std::vector<BayesCategory> cats{bayes::pointCategory(vec2(0.5, 0.5), 0.1)};
        const Vector t = bayes::posteriors(cats, {1}, vec2(0.2, 0.9));
        CHECK(t.size() == 1);
        CHECK(t[0] == 1.0);
    }

    SUBCASE("identical categories split evenly") {
        const BayesCategory c = bayes::pointCategory(vec2(0.5, 0.5), 0.1);
        const Vector t = bayes::posteriors({c, c}, {3, 3}, vec2(0.1, 0.8));
        CHECK(t[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(t[1] == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("two-category posterior is the logistic of the log ratio") {
        const BayesCategory c1{vec1(0.0), Matrix::Constant(1, 1, 0.25)};
        const BayesCategory c2{vec1(1.0), Matrix::Constant(1, 1, 0.25)};
        const Vector t = bayes::posteriors({c1, c2}, {1, 1}, vec1(0.2));
        const Real50 expected = 1 / (1 + exp(-Real50("1.2")));
        CHECK(t[0] == doctest::Approx(toDouble(expected)).epsilon(1e-12));
        CHECK(t[0] + t[1] == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("posteriors sum to one for random category sets") {
        prep::SplitMix64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<BayesCategory> cats;
            std::vector<std::int64_t> counts;
            const int k = 2 + static_cast<int>(rng.below(6));
            for (int j = 0; j < k; ++j) {
                BayesCategory c = bayes::pointCategory(vec2(rng.uniform(), rng.uniform()),
                                                       0.05 + 0.2 * rng.uniform());
                cats.push_back(c);
                counts.push_back(1 + static_cast<std::int64_t>(rng.below(20)));
            }
            const Vector t = bayes::posteriors(cats, counts, vec2(rng.uniform(), rng.uniform()));
            CHECK(std::abs(t.sum() - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("bayesian match is a volume bound with reversed inequality") {
    SUBCASE("diagonal determinant example") {
        BayesCategory c{vec2(0.5, 0.5), Matrix::Zero(2, 2)};
        c.cov(0, 0) = 0.01;
        c.cov(1, 1) = 0.04;
        CHECK(bayes::matchValue(c) == doctest::Approx(4e-4).epsilon(1e-12));
        CHECK(bayes::vigilancePass(c, 1e-3));
        CHECK_FALSE(bayes::vigilancePass(c, 1e-5));
    }

    SUBCASE("fresh categories always pass at birth") {
        // sigma_init^2 = 0.01, d = 2: det = 1e-4 <= rho = 1e-3.
        const BayesCategory fresh = bayes::pointCategory(vec2(0.3, 0.3), 0.1);
        CHECK(bayes::matchValue(fresh) == doctest::Approx(1e-4).epsilon(1e-12));
        CHECK(bayes::vigilancePass(fresh, 1e-3));
    }

    SUBCASE("second identical sample halves the covariance") {
        const BayesCategory fresh = bayes::pointCategory(vec2(0.3, 0.3), 0.1);
        const BayesCategory updated = bayes::learn(fresh, 1, vec2(0.3, 0.3), false);
        CHECK(updated.cov == 0.5 * fresh.cov);
        CHECK(bayes::matchValue(updated) ==
              doctest::Approx(bayes::matchValue(fresh) / 4.0).epsilon(1e-12));
    }

    SUBCASE("full covariance captures correlation off the diagonal") {
        BayesCategory c = bayes::pointCategory(vec2(0.2, 0.2), 0.05);
        c = bayes::learn(c, 1, vec2(0.4, 0.4), false);
        CHECK(c.cov(0, 1) > 0.0);
        CHECK(c.cov(0, 1) == c.cov(1, 0));

        BayesCategory diag = bayes::pointCategory(vec2(0.2, 0.2), 0.05);
        diag = bayes::learn(diag, 1, vec2(0.4, 0.4), true);
        CHECK(diag.cov(0, 1) == 0.0);
    }
}

TEST_CASE("bayes configuration constraint") {
    BayesParams p;
    p.rho = 1e-3;
    p.sigmaInit = 0.5;
    CHECK_THROWS_AS(p.validateForDim(2), ConfigError);
    p.sigmaInit = 0.05;
    CHECK_NOTHROW(p.validateForDim(2));
}

TEST_CASE("log-domain argmax agrees with the direct-domain oracle") {
    // Direct-domain posterior at 50-digit precision, d <= 3 fixtures.
    prep::SplitMix64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(3));
        GaussParams p;
        p.rho = 0.2;
        p.sigmaInit = 0.25;
        ArtState state = makeState(p, d);
        for (int step = 0; step < 30; ++step) {
            Vector x(d);
            for (int i = 0; i < d; ++i) {
                x[i] = rng.uniform();
            }
            present(state, x);
        }

        Vector probe(d);
        for (int i = 0; i < d; ++i) {
            probe[i] = rng.uniform();
        }
        const Vector logScores = contractFor(state.kind).activations(state, probe);
        int libArgmax = 0;
        for (int j = 1; j < logScores.size(); ++j) {
            if (logScores[j] > logScores[libArgmax]) {
                libArgmax = j;
            }
        }

        std::int64_t total = state.presentations;
        int oracleArgmax = 0;
        Real50 bestScore = -1;
        for (std::size_t j = 0; j < state.categories.size(); ++j) {
            const auto& c = std::get<GaussCategory>(state.categories[j].data);
            Real50 quad = 0;
            Real50 det = 1;
            for (int i = 0; i < d; ++i) {
                const Real50 z = (Real50(c.mean[i]) - Real50(probe[i])) / Real50(c.sigma[i]);
                quad += z * z;
                det *= Real50(c.sigma[i]) * Real50(c.sigma[i]);
            }
            const Real50 prior = Real50(state.categories[j].count) / Real50(total);
            const Real50 score = exp(-quad / 2) / sqrt(det) * prior;
            if (score > bestScore) {
                bestScore = score;
                oracleArgmax = static_cast<int>(j);
            }
        }
        CHECK(libArgmax == oracleArgmax);
    }
}
