// Versioned JSON model files. Floats are encoded as hexadecimal float
// literals ("%a" / strtod), which round-trip bit-exactly; the schema is
// format_version 1 and unknown top-level fields are rejected.
#pragma once

#include "art/engine.hpp"
#include "art/preprocess.hpp"
#include "art/supervised.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace art::io {

inline constexpr int kFormatVersion = 1;

/// Everything a model file carries: the trained model, the preprocessing
/// ranges it was trained with, and the label string table (supervised).
struct ModelBundle {
    std::variant<ArtState, sfam::SfamState> model;
    std::optional<prep::NormalizationRanges> ranges;
    std::vector<std::string> labelNames;

    bool supervised() const { return std::holds_alternative<sfam::SfamState>(model); }
};

std::string toJson(const ModelBundle& bundle, int indent = 2);
ModelBundle fromJson(const std::string& text);

void save(const ModelBundle& bundle, const std::string& path);
ModelBundle load(const std::string& path);

/// Lossless double <-> hex-literal helpers (exposed for tests).
std::string hexFromDouble(double v);
double doubleFromHex(const std::string& s);

}  // namespace art::io
