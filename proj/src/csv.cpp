#include "art/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace art::io {

namespace {

// One CSV record, honoring quoted fields with "" escapes. Returns false at
// end of stream.
bool readRecord(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool quoted = false;
    bool sawAny = false;
    int ch;
    while ((ch = in.get()) != EOF) {
        sawAny = true;
        const char c = static_cast<char>(ch);
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\r') {
            // swallow; \n ends the record
        } else if (c == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(c);
        }
    }
    if (!sawAny) {
        return false;
    }
    fields.push_back(std::move(field));
    return true;
}

double parseCell(const std::string& cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    // trim surrounding spaces
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw DataError("csv: non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                        ", column " + std::to_string(col));
    }
    if (!std::isfinite(value)) {
        throw DataError("csv: non-finite cell at row " + std::to_string(row) + ", column " +
                        std::to_string(col));
    }
    return value;
}

}  // namespace

Dataset loadCsv(const std::string& path, const std::optional<std::string>& labelColumn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("csv: cannot open '" + path + "'");
    }

    std::vector<std::string> header;
    if (!readRecord(in, header) || header.empty()) {
        throw DataError("csv: missing header row in '" + path + "'");
    }

    std::ptrdiff_t labelIdx = -1;
    if (labelColumn) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == *labelColumn) {
                labelIdx = static_cast<std::ptrdiff_t>(i);
                break;
            }
        }
        if (labelIdx < 0) {
            throw DataError("csv: label column '" + *labelColumn + "' not found");
        }
    }

    Dataset ds;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (static_cast<std::ptrdiff_t>(i) != labelIdx) {
            ds.featureNames.push_back(header[i]);
        }
    }

    std::vector<double> values;
    std::vector<std::string> fields;
    std::size_t rows = 0;
    while (readRecord(in, fields)) {
        if (fields.size() == 1 && fields[0].empty()) {
            continue;  // trailing blank line
        }
        if (fields.size() != header.size()) {
            throw DataError("csv: ragged row " + std::to_string(rows + 2) + " in '" + path + "'");
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (static_cast<std::ptrdiff_t>(i) == labelIdx) {
                const std::string& name = fields[i];
                int id = -1;
                for (std::size_t k = 0; k < ds.labelNames.size(); ++k) {
                    if (ds.labelNames[k] == name) {
                        id = static_cast<int>(k);
                        break;
                    }
                }
                if (id < 0) {
                    id = static_cast<int>(ds.labelNames.size());
                    ds.labelNames.push_back(name);
                }
                ds.labels.push_back(id);
            } else {
                values.push_back(parseCell(fields[i], rows + 2, i + 1));
            }
        }
        ++rows;
    }
    if (rows == 0) {
        throw DataError("csv: no data rows in '" + path + "'");
    }

    const std::size_t cols = ds.featureNames.size();
    ds.features.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            ds.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                values[r * cols + c];
        }
    }
    return ds;
}

void writeLabelsCsv(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("csv: cannot write '" + path + "'");
    }
    out << "label\n";
    for (int v : labels) {
        out << v << "\n";
    }
}

std::vector<std::string> readLabelColumn(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("csv: cannot open '" + path + "'");
    }
    std::vector<std::string> header;
    if (!readRecord(in, header) || header.empty()) {
        throw DataError("csv: missing header row in '" + path + "'");
    }
    std::size_t col = 0;
    if (header.size() > 1) {
        bool found = false;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == "label") {
                col = i;
                found = true;
                break;
            }
        }
        if (!found) {
            throw DataError("csv: no 'label' column in '" + path + "'");
        }
    }
    std::vector<std::string> out;
    std::vector<std::string> fields;
    while (readRecord(in, fields)) {
        if (fields.size() == 1 && fields[0].empty()) {
            continue;
        }
        if (col >= fields.size()) {
            throw DataError("csv: ragged row in '" + path + "'");
        }
        out.push_back(fields[col]);
    }
    if (out.empty()) {
        throw DataError("csv: no data rows in '" + path + "'");
    }
    return out;
}

}  // namespace art::io
