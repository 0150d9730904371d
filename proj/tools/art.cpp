// art — batch CLI for the ART toolkit.
//
// Subcommands: fit, fit-supervised, predict, eval, info.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 model error.
#include "art/contract.hpp"
#include "art/csv.hpp"
#include "art/engine.hpp"
#include "art/metrics.hpp"
#include "art/models/ellipsoid.hpp"
#include "art/models/fuzzy.hpp"
#include "art/models/hypersphere.hpp"
#include "art/persist.hpp"
#include "art/preprocess.hpp"
#include "art/supervised.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace art;

struct FitFlags {
    std::string model;
    std::string input;
    std::string output;
    std::string labelsOut;
    std::string epochs = "auto";
    double rho = 0.0;
    double alpha = 0.001;
    double beta = 1.0;
    double rhoLb = -1.0;  // < 0 means "same as rho"
    double mu = 0.5;
    double rbar = 0.0;
    double sigmaInit = -1.0;  // < 0 means the per-model default
    long phi = 5;
    long tau = 100;
    double beta2 = 0.6;
    double L = 2.0;
    std::optional<std::uint64_t> seed;
};

void addFitFlags(CLI::App* cmd, FitFlags& f) {
    cmd->add_option("--model", f.model, "Model kind")
        ->required()
        ->check(CLI::IsMember({"art1", "fuzzy", "dvfa", "hypersphere", "ellipsoid", "gaussian",
                               "bayes", "topoart"}));
    cmd->add_option("--input", f.input, "Training CSV (header required)")->required();
    cmd->add_option("--rho", f.rho, "Vigilance parameter")->required();
    cmd->add_option("--alpha", f.alpha, "Choice parameter");
    cmd->add_option("--beta", f.beta, "Learning rate");
    cmd->add_option("--rho-lb", f.rhoLb, "DVFA lower-bound vigilance");
    cmd->add_option("--mu", f.mu, "Ellipsoid axis ratio");
    cmd->add_option("--rbar", f.rbar, "Radial extent (auto-computed when omitted)");
    cmd->add_option("--sigma-init", f.sigmaInit, "Initial standard deviation");
    cmd->add_option("--phi", f.phi, "TopoART permanence threshold");
    cmd->add_option("--tau", f.tau, "TopoART cleanup period");
    cmd->add_option("--beta2", f.beta2, "TopoART second-winner learning rate");
    cmd->add_option("--L", f.L, "ART 1 uncommitted-bias parameter");
    cmd->add_option("--epochs", f.epochs, "Epoch budget: a number or 'auto'");
    cmd->add_option("--seed", f.seed, "Presentation-order shuffle seed");
    cmd->add_option("--output", f.output, "Model file to write")->required();
}

int parseEpochs(const std::string& text) {
    if (text == "auto") {
        return 100;  // convergence normally stops far earlier
    }
    try {
        std::size_t pos = 0;
        const int v = std::stoi(text, &pos);
        if (pos != text.size() || v < 1) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("--epochs must be a positive integer or 'auto'");
    }
}

// Model parameters from flags; rbar resolution needs the normalized data.
ModelParams buildParams(const FitFlags& f, const Matrix& normalized) {
    const ModelKind kind = modelKindFromString(f.model);
    switch (kind) {
        case ModelKind::Art1:
            return Art1Params{f.rho, f.L};
        case ModelKind::Fuzzy:
            return FuzzyParams{f.alpha, f.beta, f.rho};
        case ModelKind::Dvfa:
            return DvfaParams{f.alpha, f.beta, f.rho, f.rhoLb < 0.0 ? f.rho : f.rhoLb};
        case ModelKind::Hypersphere:
            return SphereParams{f.alpha, f.beta, f.rho,
                                f.rbar > 0.0 ? f.rbar : sphere::resolveRbar(normalized)};
        case ModelKind::Ellipsoid:
            return EllipsoidParams{f.alpha, f.beta, f.rho, f.mu,
                                   f.rbar > 0.0 ? f.rbar
                                                : ellipsoid::resolveRbar(normalized, f.mu)};
        case ModelKind::Gaussian:
            return GaussParams{f.rho, f.sigmaInit > 0.0 ? f.sigmaInit : 0.5};
        case ModelKind::Bayes:
            return BayesParams{f.rho, f.sigmaInit > 0.0 ? f.sigmaInit : 0.1};
        case ModelKind::TopoArt: {
            TopoParams p;
            p.alpha = f.alpha;
            p.beta2 = f.beta2;
            p.rhoA = f.rho;
            p.phi = f.phi;
            p.tau = f.tau;
            return p;
        }
    }
    throw ConfigError("unknown model");
}

struct Prepared {
    Matrix data;  // what the engine sees (normalized, complement-coded)
    std::optional<prep::NormalizationRanges> ranges;
    int inputDim = 0;
};

Prepared prepare(ModelKind kind, const Matrix& raw) {
    Prepared out;
    out.inputDim = static_cast<int>(raw.cols());
    if (kind == ModelKind::Art1) {
        out.data = raw;  // binary data is used as-is; present() validates it
        return out;
    }
    auto [normalized, ranges] = prep::normalizeFit(raw);
    out.ranges = ranges;
    out.data = usesComplementCoding(kind) ? prep::complementCodeRows(normalized) : normalized;
    return out;
}

Vector prepareRow(const io::ModelBundle& bundle, const ArtState& state, const Vector& raw) {
    Vector x = raw;
    if (bundle.ranges) {
        x = prep::normalizeApply(*bundle.ranges, x);
    }
    if (state.complementCoded) {
        x = prep::complementCode(x);
    }
    return x;
}

int runFit(const FitFlags& f) {
    const io::Dataset ds = io::loadCsv(f.input);
    const ModelKind kind = modelKindFromString(f.model);
    const Prepared prep = prepare(kind, ds.features);
    const ModelParams params = buildParams(f, prep.data);

    ArtState state = makeState(params, prep.inputDim);
    const FitResult result = fit(state, prep.data, parseEpochs(f.epochs), f.seed);

    io::ModelBundle bundle;
    bundle.model = state;
    bundle.ranges = prep.ranges;
    io::save(bundle, f.output);

    std::cout << "model: " << f.model << "\n"
              << "categories: "
              << (kind == ModelKind::TopoArt ? state.topo->a.categories.size()
                                             : state.categories.size())
              << "\n"
              << "epochs: " << result.epochsRun << (result.converged ? " (converged)" : "")
              << "\n";

    if (!f.labelsOut.empty()) {
        std::vector<int> labels(result.labels.size(), -1);
        for (std::size_t i = 0; i < result.labels.size(); ++i) {
            if (kind == ModelKind::TopoArt) {
                try {
                    labels[i] =
                        *predict(state, Vector(prep.data.row(static_cast<Eigen::Index>(i))));
                } catch (const ModelError&) {
                    labels[i] = -1;  // no permanent categories in module B
                }
            } else {
                labels[i] = clusterLabel(state, result.labels[i]);
            }
        }
        io::writeLabelsCsv(f.labelsOut, labels);
    }
    return 0;
}

int runFitSupervised(const FitFlags& f, const std::string& labelColumn, const std::string& mt,
                     double epsilon) {
    const io::Dataset ds = io::loadCsv(f.input, labelColumn);
    const ModelKind kind = modelKindFromString(f.model);
    const Prepared prep = prepare(kind, ds.features);

    sfam::SfamParams params;
    params.inner = buildParams(f, prep.data);
    params.mt = mt == "minus" ? sfam::MatchTracking::Minus : sfam::MatchTracking::Plus;
    params.epsilon = epsilon;

    sfam::SfamState state = sfam::makeState(params, prep.inputDim);
    const sfam::FitResult result =
        sfam::fit(state, prep.data, ds.labels, parseEpochs(f.epochs), f.seed);

    io::ModelBundle bundle;
    bundle.model = state;
    bundle.ranges = prep.ranges;
    bundle.labelNames = ds.labelNames;
    io::save(bundle, f.output);

    std::cout << "model: " << f.model << " (sfam)\n"
              << "categories: " << state.inner.categories.size() << "\n"
              << "classes: " << ds.labelNames.size() << "\n"
              << "epochs: " << result.epochsRun << (result.converged ? " (converged)" : "")
              << "\n";
    return 0;
}

int runPredict(const std::string& modelFile, const std::string& input, const std::string& output,
               const std::string& policy) {
    const io::ModelBundle bundle = io::load(modelFile);
    const io::Dataset ds = io::loadCsv(input);
    const bool strict = policy == "strict";

    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(ds.features.rows()));
    if (bundle.supervised()) {
        const auto& s = std::get<sfam::SfamState>(bundle.model);
        for (Eigen::Index r = 0; r < ds.features.rows(); ++r) {
            const Vector x = prepareRow(bundle, s.inner, Vector(ds.features.row(r)));
            labels.push_back(sfam::predict(s, x, strict).value_or(-1));
        }
    } else {
        const auto& state = std::get<ArtState>(bundle.model);
        const PredictPolicy p = strict ? PredictPolicy::Strict : PredictPolicy::Nearest;
        for (Eigen::Index r = 0; r < ds.features.rows(); ++r) {
            const Vector x = prepareRow(bundle, state, Vector(ds.features.row(r)));
            labels.push_back(predict(state, x, p).value_or(-1));
        }
    }
    io::writeLabelsCsv(output, labels);
    std::cout << "predictions: " << labels.size() << "\n";
    return 0;
}

int runEval(const std::string& predPath, const std::string& truthPath, const std::string& metric) {
    const std::vector<std::string> pred = io::readLabelColumn(predPath);
    const std::vector<std::string> truth = io::readLabelColumn(truthPath);
    if (pred.size() != truth.size()) {
        throw DataError("eval: prediction/truth length mismatch");
    }

    // Joint string -> id table so equal strings compare equal across files;
    // "-1" stays the unassigned marker.
    std::map<std::string, int> table;
    auto toId = [&table](const std::string& s) {
        if (s == "-1") {
            return -1;
        }
        auto [it, inserted] = table.try_emplace(s, static_cast<int>(table.size()));
        return it->second;
    };
    std::vector<int> predIds;
    std::vector<int> truthIds;
    predIds.reserve(pred.size());
    truthIds.reserve(truth.size());
    for (const auto& s : pred) predIds.push_back(toId(s));
    for (const auto& s : truth) truthIds.push_back(toId(s));

    const double value = metric == "ari" ? metrics::adjustedRandIndex(predIds, truthIds)
                                         : metrics::accuracy(predIds, truthIds);
    std::cout << "metric=" << nlohmann::json(value).dump() << "\n";
    return 0;
}

double categorySizeOf(const ArtState& state, const Category& c) {
    const double d = static_cast<double>(state.inputDim);
    struct Visitor {
        double d;
        double operator()(const FuzzyCategory& f) const { return fuzzy::categorySize(f.w, d); }
        double operator()(const Art1Category& a) const { return a.topDown.sum(); }
        double operator()(const SphereCategory& s) const { return s.radius; }
        double operator()(const EllipsoidCategory& e) const { return e.radius; }
        double operator()(const GaussCategory& g) const { return g.sigma.mean(); }
        double operator()(const BayesCategory& b) const { return b.cov.determinant(); }
    };
    return std::visit(Visitor{d}, c.data);
}

int runInfo(const std::string& modelFile) {
    const io::ModelBundle bundle = io::load(modelFile);
    const ArtState& state = bundle.supervised() ? std::get<sfam::SfamState>(bundle.model).inner
                                                : std::get<ArtState>(bundle.model);
    std::cout << "kind: " << toString(state.kind) << (bundle.supervised() ? " (sfam)" : "") << "\n"
              << "input_dim: " << state.inputDim << "\n"
              << "complement_coding: " << (state.complementCoded ? "true" : "false") << "\n";

    if (state.kind == ModelKind::TopoArt) {
        const auto& net = *state.topo;
        std::cout << "categories_a: " << net.a.categories.size() << "\n"
                  << "categories_b: " << net.b.categories.size() << "\n"
                  << "edges_a: " << net.a.edges.size() << "\n"
                  << "edges_b: " << net.b.edges.size() << "\n";
        int clustersB = 0;
        for (int c : topo::clusters(net.b)) {
            clustersB = std::max(clustersB, c + 1);
        }
        std::cout << "clusters_b: " << clustersB << "\n";
        return 0;
    }

    std::cout << "categories: " << state.categories.size() << "\n";
    if (state.kind == ModelKind::Dvfa) {
        std::cout << "clusters: " << state.clusterCount << "\n";
    }
    if (bundle.supervised()) {
        const auto& s = std::get<sfam::SfamState>(bundle.model);
        const std::size_t classes =
            bundle.labelNames.empty()
                ? static_cast<std::size_t>(
                      *std::max_element(s.classOf.begin(), s.classOf.end()) + 1)
                : bundle.labelNames.size();
        std::cout << "classes: " << classes << "\n";
    }
    if (!state.categories.empty()) {
        double lo = categorySizeOf(state, state.categories.front());
        double hi = lo;
        double sum = 0.0;
        for (const auto& c : state.categories) {
            const double s = categorySizeOf(state, c);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            sum += s;
        }
        std::cout << "size_min: " << lo << "\n"
                  << "size_mean: " << sum / static_cast<double>(state.categories.size()) << "\n"
                  << "size_max: " << hi << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ART toolkit: online clustering and classification"};
    app.require_subcommand(1);

    FitFlags fitFlags;
    CLI::App* fitCmd = app.add_subcommand("fit", "Train an unsupervised model");
    addFitFlags(fitCmd, fitFlags);
    fitCmd->add_option("--labels-out", fitFlags.labelsOut, "Final-epoch labels CSV");

    FitFlags supFlags;
    std::string labelColumn;
    std::string mt = "plus";
    double epsilon = 0.001;
    CLI::App* supCmd = app.add_subcommand("fit-supervised", "Train a simplified ARTMAP classifier");
    addFitFlags(supCmd, supFlags);
    supCmd->add_option("--label-column", labelColumn, "Name of the class column")->required();
    supCmd->add_option("--mt", mt, "Match-tracking mode")->check(CLI::IsMember({"plus", "minus"}));
    supCmd->add_option("--epsilon", epsilon, "Match-tracking magnitude");

    std::string modelFile, input, output, policy = "strict";
    CLI::App* predictCmd = app.add_subcommand("predict", "Label samples with a trained model");
    predictCmd->add_option("--model-file", modelFile, "Trained model JSON")->required();
    predictCmd->add_option("--input", input, "Feature CSV")->required();
    predictCmd->add_option("--output", output, "Predictions CSV")->required();
    predictCmd->add_option("--policy", policy, "strict rejects non-resonant winners")
        ->check(CLI::IsMember({"strict", "nearest"}));

    std::string predPath, truthPath, metric;
    CLI::App* evalCmd = app.add_subcommand("eval", "Compare predictions against ground truth");
    evalCmd->add_option("--pred", predPath, "Predictions CSV")->required();
    evalCmd->add_option("--truth", truthPath, "Ground-truth CSV")->required();
    evalCmd->add_option("--metric", metric, "Metric")
        ->required()
        ->check(CLI::IsMember({"ari", "accuracy"}));

    std::string infoFile;
    CLI::App* infoCmd = app.add_subcommand("info", "Print a model summary");
    infoCmd->add_option("--model-file", infoFile, "Trained model JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*fitCmd) {
            return runFit(fitFlags);
        }
        if (*supCmd) {
            return runFitSupervised(supFlags, labelColumn, mt, epsilon);
        }
        if (*predictCmd) {
            return runPredict(modelFile, input, output, policy);
        }
        if (*evalCmd) {
            return runEval(predPath, truthPath, metric);
        }
        if (*infoCmd) {
            return runInfo(infoFile);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
