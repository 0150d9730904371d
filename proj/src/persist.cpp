#include "art/persist.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace art::io {

using nlohmann::json;

std::string hexFromDouble(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

double doubleFromHex(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size() || s.empty()) {
        throw ModelError("model file: bad float literal '" + s + "'");
    }
    return v;
}

namespace {

json encodeVector(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(hexFromDouble(v[i]));
    }
    return out;
}

Vector decodeVector(const json& j, const char* what) {
    if (!j.is_array()) {
        throw ModelError(std::string("model file: ") + what + " must be an array");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            throw ModelError(std::string("model file: ") + what + " entries must be hex strings");
        }
        v[static_cast<Eigen::Index>(i)] = doubleFromHex(j[i].get<std::string>());
    }
    return v;
}

json encodeMatrix(const Matrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(encodeVector(Vector(m.row(r))));
    }
    return out;
}

Matrix decodeMatrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw ModelError(std::string("model file: ") + what + " must be a non-empty array");
    }
    const Vector first = decodeVector(j[0], what);
    Matrix m(static_cast<Eigen::Index>(j.size()), first.size());
    m.row(0) = first.transpose();
    for (std::size_t r = 1; r < j.size(); ++r) {
        const Vector row = decodeVector(j[r], what);
        if (row.size() != first.size()) {
            throw ModelError(std::string("model file: ragged ") + what);
        }
        m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    return m;
}

json encodeParams(const ModelParams& params) {
    struct Visitor {
        json operator()(const Art1Params& p) const {
            return {{"rho", hexFromDouble(p.rho)}, {"L", hexFromDouble(p.uncommittedScale)}};
        }
        json operator()(const FuzzyParams& p) const {
            return {{"alpha", hexFromDouble(p.alpha)},
                    {"beta", hexFromDouble(p.beta)},
                    {"rho", hexFromDouble(p.rho)}};
        }
        json operator()(const DvfaParams& p) const {
            return {{"alpha", hexFromDouble(p.alpha)},
                    {"beta", hexFromDouble(p.beta)},
                    {"rho_ub", hexFromDouble(p.rhoUpper)},
                    {"rho_lb", hexFromDouble(p.rhoLower)}};
        }
        json operator()(const SphereParams& p) const {
            return {{"alpha", hexFromDouble(p.alpha)},
                    {"beta", hexFromDouble(p.beta)},
                    {"rho", hexFromDouble(p.rho)},
                    {"rbar", hexFromDouble(p.rbar)}};
        }
        json operator()(const EllipsoidParams& p) const {
            return {{"alpha", hexFromDouble(p.alpha)},
                    {"beta", hexFromDouble(p.beta)},
                    {"rho", hexFromDouble(p.rho)},
                    {"mu", hexFromDouble(p.mu)},
                    {"rbar", hexFromDouble(p.rbar)},
                    {"axis_from_pre_update_center", p.axisFromPreUpdateCenter}};
        }
        json operator()(const GaussParams& p) const {
            return {{"rho", hexFromDouble(p.rho)}, {"sigma_init", hexFromDouble(p.sigmaInit)}};
        }
        json operator()(const BayesParams& p) const {
            return {{"rho", hexFromDouble(p.rho)},
                    {"sigma_init", hexFromDouble(p.sigmaInit)},
                    {"diagonal", p.diagonal}};
        }
        json operator()(const TopoParams& p) const {
            return {{"alpha", hexFromDouble(p.alpha)},
                    {"beta2", hexFromDouble(p.beta2)},
                    {"rho", hexFromDouble(p.rhoA)},
                    {"phi", p.phi},
                    {"tau", p.tau}};
        }
    };
    return std::visit(Visitor{}, params);
}

double hexField(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw ModelError(std::string("model file: missing parameter '") + key + "'");
    }
    return doubleFromHex(j[key].get<std::string>());
}

ModelParams decodeParams(ModelKind kind, const json& j) {
    switch (kind) {
        case ModelKind::Art1:
            return Art1Params{hexField(j, "rho"), hexField(j, "L")};
        case ModelKind::Fuzzy:
            return FuzzyParams{hexField(j, "alpha"), hexField(j, "beta"), hexField(j, "rho")};
        case ModelKind::Dvfa:
            return DvfaParams{hexField(j, "alpha"), hexField(j, "beta"), hexField(j, "rho_ub"),
                              hexField(j, "rho_lb")};
        case ModelKind::Hypersphere:
            return SphereParams{hexField(j, "alpha"), hexField(j, "beta"), hexField(j, "rho"),
                                hexField(j, "rbar")};
        case ModelKind::Ellipsoid: {
            EllipsoidParams p{hexField(j, "alpha"), hexField(j, "beta"), hexField(j, "rho"),
                              hexField(j, "mu"), hexField(j, "rbar")};
            p.axisFromPreUpdateCenter = j.value("axis_from_pre_update_center", false);
            return p;
        }
        case ModelKind::Gaussian:
            return GaussParams{hexField(j, "rho"), hexField(j, "sigma_init")};
        case ModelKind::Bayes: {
            BayesParams p{hexField(j, "rho"), hexField(j, "sigma_init")};
            p.diagonal = j.value("diagonal", false);
            return p;
        }
        case ModelKind::TopoArt: {
            TopoParams p;
            p.alpha = hexField(j, "alpha");
            p.beta2 = hexField(j, "beta2");
            p.rhoA = hexField(j, "rho");
            p.phi = j.at("phi").get<long>();
            p.tau = j.at("tau").get<long>();
            return p;
        }
    }
    throw ModelError("model file: unknown model kind");
}

json encodeCategory(const Category& c) {
    struct Visitor {
        json operator()(const FuzzyCategory& f) const { return {{"w", encodeVector(f.w)}}; }
        json operator()(const Art1Category& a) const {
            return {{"top_down", encodeVector(a.topDown)},
                    {"bottom_up", encodeVector(a.bottomUp)}};
        }
        json operator()(const SphereCategory& s) const {
            return {{"center", encodeVector(s.center)}, {"radius", hexFromDouble(s.radius)}};
        }
        json operator()(const EllipsoidCategory& e) const {
            return {{"center", encodeVector(e.center)},
                    {"axis", encodeVector(e.axis)},
                    {"radius", hexFromDouble(e.radius)}};
        }
        json operator()(const GaussCategory& g) const {
            return {{"mean", encodeVector(g.mean)}, {"sigma", encodeVector(g.sigma)}};
        }
        json operator()(const BayesCategory& b) const {
            return {{"mean", encodeVector(b.mean)}, {"cov", encodeMatrix(b.cov)}};
        }
    };
    json out = std::visit(Visitor{}, c.data);
    out["count"] = c.count;
    return out;
}

Category decodeCategory(ModelKind kind, const json& j) {
    Category c;
    if (!j.contains("count") || !j["count"].is_number_integer()) {
        throw ModelError("model file: category missing count");
    }
    c.count = j["count"].get<std::int64_t>();
    switch (kind) {
        case ModelKind::Fuzzy:
        case ModelKind::Dvfa:
            c.data = FuzzyCategory{decodeVector(j.at("w"), "w")};
            break;
        case ModelKind::Art1:
            c.data = Art1Category{decodeVector(j.at("top_down"), "top_down"),
                                  decodeVector(j.at("bottom_up"), "bottom_up")};
            break;
        case ModelKind::Hypersphere:
            c.data = SphereCategory{decodeVector(j.at("center"), "center"),
                                    hexField(j, "radius")};
            break;
        case ModelKind::Ellipsoid:
            c.data = EllipsoidCategory{decodeVector(j.at("center"), "center"),
                                       decodeVector(j.at("axis"), "axis"),
                                       hexField(j, "radius")};
            break;
        case ModelKind::Gaussian:
            c.data = GaussCategory{decodeVector(j.at("mean"), "mean"),
                                   decodeVector(j.at("sigma"), "sigma")};
            break;
        case ModelKind::Bayes:
            c.data = BayesCategory{decodeVector(j.at("mean"), "mean"),
                                   decodeMatrix(j.at("cov"), "cov")};
            break;
        case ModelKind::TopoArt:
            throw ModelError("model file: topoart categories live in the topology section");
    }
    return c;
}

json encodeModule(const topo::TopoModule& m) {
    json cats = json::array();
    for (const auto& c : m.categories) {
        cats.push_back({{"w", encodeVector(c.w)}, {"count", c.count}, {"permanent", c.permanent}});
    }
    json edges = json::array();
    for (const auto& [u, v] : m.edges) {
        edges.push_back(json::array({u, v}));
    }
    return {{"categories", cats},
            {"edges", edges},
            {"presentations", m.presentations},
            {"removed_count", m.removedCount}};
}

topo::TopoModule decodeModule(const json& j) {
    topo::TopoModule m;
    for (const auto& c : j.at("categories")) {
        m.categories.push_back({decodeVector(c.at("w"), "w"), c.at("count").get<std::int64_t>(),
                                c.at("permanent").get<bool>()});
    }
    for (const auto& e : j.at("edges")) {
        m.edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    m.presentations = j.at("presentations").get<std::int64_t>();
    m.removedCount = j.at("removed_count").get<std::int64_t>();
    return m;
}

json encodeState(const ArtState& state) {
    json out;
    out["model_kind"] = toString(state.kind);
    out["input_dim"] = state.inputDim;
    out["complement_coding"] = state.complementCoded;
    out["params"] = encodeParams(state.params);
    out["presentations"] = state.presentations;
    json cats = json::array();
    for (const auto& c : state.categories) {
        cats.push_back(encodeCategory(c));
    }
    out["categories"] = cats;
    if (state.kind == ModelKind::Dvfa) {
        out["cluster_map"] = state.clusterOf;
        out["cluster_count"] = state.clusterCount;
    }
    if (state.kind == ModelKind::TopoArt) {
        out["topology"] = {{"a", encodeModule(state.topo->a)}, {"b", encodeModule(state.topo->b)}};
    }
    return out;
}

ArtState decodeState(const json& j) {
    if (!j.contains("model_kind") || !j["model_kind"].is_string()) {
        throw ModelError("model file: missing model_kind");
    }
    if (!j.contains("categories")) {
        throw ModelError("model file: missing categories field");
    }
    ArtState state;
    state.kind = modelKindFromString(j["model_kind"].get<std::string>());
    state.inputDim = j.at("input_dim").get<int>();
    state.complementCoded = j.at("complement_coding").get<bool>();
    state.params = decodeParams(state.kind, j.at("params"));
    state.presentations = j.value("presentations", std::int64_t{0});
    for (const auto& c : j.at("categories")) {
        state.categories.push_back(decodeCategory(state.kind, c));
    }
    if (state.kind == ModelKind::Dvfa) {
        state.clusterOf = j.at("cluster_map").get<std::vector<int>>();
        state.clusterCount = j.at("cluster_count").get<int>();
    }
    if (state.kind == ModelKind::TopoArt) {
        state.topo.emplace();
        state.topo->a = decodeModule(j.at("topology").at("a"));
        state.topo->b = decodeModule(j.at("topology").at("b"));
    }
    if (state.complementCoded != usesComplementCoding(state.kind)) {
        throw ModelError("model file: complement_coding inconsistent with model kind");
    }
    return state;
}

const std::set<std::string> kKnownTopLevel = {
    "format_version", "model_kind", "input_dim", "complement_coding", "params",
    "presentations",  "categories", "cluster_map", "cluster_count", "topology",
    "normalization",  "label_names", "map_field", "supervised"};

}  // namespace

std::string toJson(const ModelBundle& bundle, int indent) {
    json out;
    out["format_version"] = kFormatVersion;

    const ArtState* inner = nullptr;
    if (bundle.supervised()) {
        const auto& s = std::get<sfam::SfamState>(bundle.model);
        inner = &s.inner;
        out["map_field"] = s.classOf;
        out["supervised"] = {
            {"mt", s.params.mt == sfam::MatchTracking::Plus ? "plus" : "minus"},
            {"epsilon", hexFromDouble(s.params.epsilon)}};
    } else {
        inner = &std::get<ArtState>(bundle.model);
    }
    json state = encodeState(*inner);
    for (auto& [key, value] : state.items()) {
        out[key] = value;
    }

    if (bundle.ranges) {
        out["normalization"] = {{"min", encodeVector(bundle.ranges->min)},
                                {"max", encodeVector(bundle.ranges->max)}};
    }
    if (!bundle.labelNames.empty()) {
        out["label_names"] = bundle.labelNames;
    }
    return out.dump(indent) + "\n";
}

ModelBundle fromJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelError(std::string("model file: parse error: ") + e.what());
    }
    if (!j.is_object()) {
        throw ModelError("model file: root must be an object");
    }
    if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
        throw ModelError("model file: missing format_version");
    }
    if (j["format_version"].get<int>() != kFormatVersion) {
        throw ModelError("model file: unsupported format_version " +
                         std::to_string(j["format_version"].get<int>()));
    }
    for (const auto& [key, value] : j.items()) {
        if (!kKnownTopLevel.contains(key)) {
            throw ModelError("model file: unknown field '" + key + "' (newer format?)");
        }
    }

    ModelBundle bundle;
    ArtState state = decodeState(j);
    if (j.contains("map_field")) {
        sfam::SfamState s;
        s.classOf = j["map_field"].get<std::vector<int>>();
        if (s.classOf.size() != state.categories.size()) {
            throw ModelError("model file: map_field size mismatch");
        }
        const json& sup = j.at("supervised");
        s.params.mt = sup.at("mt").get<std::string>() == "minus" ? sfam::MatchTracking::Minus
                                                                 : sfam::MatchTracking::Plus;
        s.params.epsilon = hexField(sup, "epsilon");
        s.params.inner = state.params;
        s.inner = std::move(state);
        bundle.model = std::move(s);
    } else {
        bundle.model = std::move(state);
    }

    if (j.contains("normalization")) {
        prep::NormalizationRanges ranges;
        ranges.min = decodeVector(j["normalization"].at("min"), "normalization.min");
        ranges.max = decodeVector(j["normalization"].at("max"), "normalization.max");
        if (ranges.min.size() != ranges.max.size()) {
            throw ModelError("model file: normalization range size mismatch");
        }
        bundle.ranges = std::move(ranges);
    }
    if (j.contains("label_names")) {
        bundle.labelNames = j["label_names"].get<std::vector<std::string>>();
    }
    return bundle;
}

void save(const ModelBundle& bundle, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("model file: cannot write '" + path + "'");
    }
    out << toJson(bundle);
}

ModelBundle load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ModelError("model file: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return fromJson(buf.str());
}

}  // namespace art::io
