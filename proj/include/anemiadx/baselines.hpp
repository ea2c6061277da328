#ifndef ANEMIADX_BASELINES_HPP
#define ANEMIADX_BASELINES_HPP

#include <array>
#include <string_view>

#include "anemiadx/cbc.hpp"

namespace anemiadx {

// The seven classical red-cell discrimination formulas with their published
// cut-offs. Every one of them reads "IDA when the value is at or above the
// cut-off"; boundary values therefore classify as IDA.
enum class TraditionalIndexId { Mi, Efi, Sbi, Sli, Si, Ei, Gki };

inline constexpr std::array<TraditionalIndexId, 7> kAllTraditionalIndices = {
    TraditionalIndexId::Mi,  TraditionalIndexId::Efi, TraditionalIndexId::Sbi,
    TraditionalIndexId::Sli, TraditionalIndexId::Si,  TraditionalIndexId::Ei,
    TraditionalIndexId::Gki,
};

struct TraditionalIndexInfo {
    TraditionalIndexId id;
    std::string_view symbol;       // e.g. "MI"
    std::string_view formula_text; // e.g. "MCV/RBC"
    double cutoff;
    bool ida_at_or_above; // direction of the IDA side (true for all seven)
    bool needs_rdw;
};

const TraditionalIndexInfo& traditional_index_info(TraditionalIndexId id);

// Exact formula value. Throws DataError naming RDW when the formula needs it
// and the sample lacks it.
double index_value(TraditionalIndexId id, const CbcSample& sample);

// IDA when the value sits on the IDA side of the cut-off (boundary included).
Label classify(TraditionalIndexId id, const CbcSample& sample);

bool applicable(TraditionalIndexId id, const CbcSample& sample);

} // namespace anemiadx

#endif
