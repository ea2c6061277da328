#ifndef ANEMIADX_PBIS_HPP
#define ANEMIADX_PBIS_HPP

#include <vector>

#include "anemiadx/cbc.hpp"

namespace anemiadx {

// Abnormality flags for one value against its normal range. Boundary values
// count as normal: lo is set only strictly below the range, hi only strictly
// above.
struct AbnormalFlags {
    int lo = 0;
    int hi = 0;
};

AbnormalFlags abnormal_flags(double value, const NormalRange& range);

// Coefficient of similarity between the abnormality patterns of two indices:
// 2 - (sum of per-sample flag disagreements) / n. Always in [0,2]; an index
// compared with itself scores exactly 2.
double cos_similarity(const Cohort& cohort, IndexId i, IndexId j,
                      const NormalRanges& ranges);

struct SimilarityMatrix {
    std::vector<IndexId> indices;
    std::vector<double> cells; // row-major |indices| x |indices|

    double at(std::size_t row, std::size_t col) const {
        return cells[row * indices.size() + col];
    }
};

SimilarityMatrix similarity_matrix(const Cohort& cohort,
                                   const std::vector<IndexId>& candidates,
                                   const NormalRanges& ranges);

// Backward elimination: repeatedly drops the candidate with the greatest
// total similarity against the rest until k remain. When several candidates
// tie for most redundant, the one latest in canonical index order is dropped,
// so earlier indices are preferred for retention. The result keeps canonical
// order.
std::vector<IndexId> select_indices(const Cohort& cohort,
                                    const std::vector<IndexId>& candidates,
                                    std::size_t k, const NormalRanges& ranges);

} // namespace anemiadx

#endif
