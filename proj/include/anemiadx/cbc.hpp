#ifndef ANEMIADX_CBC_HPP
#define ANEMIADX_CBC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anemiadx {

// The six CBC indices handled by the toolkit, in canonical order. RDW is
// carried separately on the sample because most data sources omit it.
enum class IndexId { Rbc = 0, Hb, Hct, Mcv, Mch, Mchc };

inline constexpr std::array<IndexId, 6> kAllIndices = {
    IndexId::Rbc, IndexId::Hb, IndexId::Hct,
    IndexId::Mcv, IndexId::Mch, IndexId::Mchc,
};

std::string_view index_name(IndexId id);
std::optional<IndexId> index_from_name(std::string_view name);

enum class Label { Ida, Btt, Normal };
enum class ClassTag { I, II, III };

std::string_view label_name(Label l);
std::optional<Label> label_from_name(std::string_view name);
std::string_view class_tag_name(ClassTag t);
std::optional<ClassTag> class_tag_from_name(std::string_view name);

// One subject's CBC indices. RBC is in million cells/uL, Hb in g/dL, HCT and
// MCHC in percent, MCV in fL, MCH in pg, RDW in percent.
struct CbcSample {
    double rbc = 0.0;
    double hb = 0.0;
    double hct = 0.0;
    double mcv = 0.0;
    double mch = 0.0;
    double mchc = 0.0;
    std::optional<double> rdw;
    std::optional<Label> label;
    std::optional<ClassTag> class_tag;

    double value(IndexId id) const;

    // Every present numeric field must be finite and strictly positive, and a
    // NORMAL label must coincide with class tag I when both are present.
    // Throws DataError naming the offending field otherwise.
    void validate() const;

    bool operator==(const CbcSample&) const = default;
};

// Normal range for one index; values strictly below `low` or strictly above
// `high` count as abnormal.
struct NormalRange {
    IndexId index = IndexId::Rbc;
    double low = 0.0;
    double high = 0.0;
};

using NormalRanges = std::array<NormalRange, 6>;

// Ranges printed in the reference data's header row: RBC 4.5-6.3, Hb 13.5-18,
// HCT 39-50, MCV 80-96, MCH 27-32, MCHC 32-38.
const NormalRanges& default_normal_ranges();

const NormalRange& range_for(const NormalRanges& ranges, IndexId id);

// An ordered, index-addressable collection of samples.
struct Cohort {
    std::vector<CbcSample> samples;
    std::string source;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

std::size_t count_label(const Cohort& cohort, Label l);
bool contains_label(const Cohort& cohort, Label l);

// Copy of the cohort without NORMAL-labelled samples, preserving order.
Cohort exclude_normal(const Cohort& cohort);

struct SplitSpec {
    std::size_t train_count = 0;
    std::size_t test_count = 0;
    std::uint64_t seed = 0;
};

struct SplitResult {
    Cohort train;
    Cohort test;
};

// Seeded shuffle split without replacement. The same spec on the same cohort
// always yields the same member lists. Throws std::invalid_argument when the
// requested counts do not fit the cohort.
SplitResult split(const Cohort& cohort, const SplitSpec& spec);

// The 20-example reference cohort: 3 beta-TT and 2 IDA class II rows,
// 5 normal class I rows, then 5 beta-TT and 5 IDA class III rows. Used as a
// fixture throughout the tests and as demo data for the CLI.
const Cohort& table2_cohort();

} // namespace anemiadx

#endif
