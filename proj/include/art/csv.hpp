// CSV dataset loading: RFC-4180-style, UTF-8, header required, '.' decimal
// separator.
#pragma once

#include "art/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace art::io {

struct Dataset {
    Matrix features;  // rows are samples
    std::vector<std::string> featureNames;
    std::vector<int> labels;               // empty when no label column requested
    std::vector<std::string> labelNames;   // id -> original string, first-appearance order
};

/// Parses decimal features; the named label column (if any) is mapped to
/// dense integer ids with a stable string<->id table. Non-finite cells are
/// rejected.
Dataset loadCsv(const std::string& path, const std::optional<std::string>& labelColumn = {});

/// Single-column `label` CSV used for predictions output (-1 = unassigned).
void writeLabelsCsv(const std::string& path, const std::vector<int>& labels);
std::vector<std::string> readLabelColumn(const std::string& path);

}  // namespace art::io
