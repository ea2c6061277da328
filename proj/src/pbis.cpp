#include "anemiadx/pbis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anemiadx/errors.hpp"

namespace anemiadx {

AbnormalFlags abnormal_flags(double value, const NormalRange& range) {
    AbnormalFlags f;
    f.lo = value < range.low ? 1 : 0;
    f.hi = value > range.high ? 1 : 0;
    return f;
}

double cos_similarity(const Cohort& cohort, IndexId i, IndexId j,
                      const NormalRanges& ranges) {
    if (cohort.empty()) {
        throw DataError("empty cohort");
    }
    const NormalRange& ri = range_for(ranges, i);
    const NormalRange& rj = range_for(ranges, j);
    long disagreements = 0;
    for (const CbcSample& s : cohort.samples) {
        AbnormalFlags fi = abnormal_flags(s.value(i), ri);
        AbnormalFlags fj = abnormal_flags(s.value(j), rj);
        disagreements += std::abs(fi.lo - fj.lo) + std::abs(fi.hi - fj.hi);
    }
    return 2.0 - static_cast<double>(disagreements) / static_cast<double>(cohort.size());
}

SimilarityMatrix similarity_matrix(const Cohort& cohort,
                                   const std::vector<IndexId>& candidates,
                                   const NormalRanges& ranges) {
    SimilarityMatrix m;
    m.indices = candidates;
    const std::size_t n = candidates.size();
    m.cells.resize(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            double v = cos_similarity(cohort, candidates[r], candidates[c], ranges);
            m.cells[r * n + c] = v;
            m.cells[c * n + r] = v;
        }
    }
    return m;
}

std::vector<IndexId> select_indices(const Cohort& cohort,
                                    const std::vector<IndexId>& candidates,
                                    std::size_t k, const NormalRanges& ranges) {
    if (k < 2 || k > candidates.size()) {
        throw std::invalid_argument("k must be in [2, number of candidates]");
    }
    std::vector<IndexId> remaining = candidates;
    std::sort(remaining.begin(), remaining.end()); // canonical order
    if (std::adjacent_find(remaining.begin(), remaining.end()) != remaining.end()) {
        throw std::invalid_argument("candidate indices must be distinct");
    }

    while (remaining.size() > k) {
        std::size_t drop = 0;
        double max_total = -1.0;
        for (std::size_t p = 0; p < remaining.size(); ++p) {
            double total = 0.0;
            for (std::size_t q = 0; q < remaining.size(); ++q) {
                if (q == p) continue;
                total += cos_similarity(cohort, remaining[p], remaining[q], ranges);
            }
            // >= lets later ties win, dropping the latest canonical index.
            if (total >= max_total) {
                max_total = total;
                drop = p;
            }
        }
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    return remaining;
}

} // namespace anemiadx
