// Long-term-memory records, one variant per model family.
#pragma once

#include "art/types.hpp"

#include <cstdint>
#include <variant>

namespace art {

/// Fuzzy ART hyperrectangle in complement-coded space: w = [u, v^c].
struct FuzzyCategory {
    Vector w;
};

/// ART 1 crisp category; bottomUp is always the normalized topDown vector.
struct Art1Category {
    Vector topDown;   // binary components
    Vector bottomUp;  // L / (L - 1 + |topDown|) * topDown
};

struct SphereCategory {
    Vector center;
    double radius = 0.0;
};

struct EllipsoidCategory {
    Vector center;
    Vector axis;  // zero vector until the second distinct sample, unit afterwards
    double radius = 0.0;
};

/// Diagonal Gaussian: per-feature standard deviations.
struct GaussCategory {
    Vector mean;
    Vector sigma;
};

struct BayesCategory {
    Vector mean;
    Matrix cov;
};

using CategoryData = std::variant<FuzzyCategory, Art1Category, SphereCategory,
                                  EllipsoidCategory, GaussCategory, BayesCategory>;

struct Category {
    CategoryData data;
    std::int64_t count = 1;  // samples encoded (n_j)
};

}  // namespace art
