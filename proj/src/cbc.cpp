#include "anemiadx/cbc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "anemiadx/errors.hpp"
#include "anemiadx/rng.hpp"

namespace anemiadx {

std::string_view index_name(IndexId id) {
    switch (id) {
        case IndexId::Rbc: return "RBC";
        case IndexId::Hb: return "Hb";
        case IndexId::Hct: return "HCT";
        case IndexId::Mcv: return "MCV";
        case IndexId::Mch: return "MCH";
        case IndexId::Mchc: return "MCHC";
    }
    return "?";
}

std::optional<IndexId> index_from_name(std::string_view name) {
    for (IndexId id : kAllIndices) {
        if (name == index_name(id)) return id;
    }
    return std::nullopt;
}

std::string_view label_name(Label l) {
    switch (l) {
        case Label::Ida: return "IDA";
        case Label::Btt: return "BTT";
        case Label::Normal: return "NORMAL";
    }
    return "?";
}

std::optional<Label> label_from_name(std::string_view name) {
    if (name == "IDA") return Label::Ida;
    if (name == "BTT") return Label::Btt;
    if (name == "NORMAL") return Label::Normal;
    return std::nullopt;
}

std::string_view class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::I: return "I";
        case ClassTag::II: return "II";
        case ClassTag::III: return "III";
    }
    return "?";
}

std::optional<ClassTag> class_tag_from_name(std::string_view name) {
    if (name == "I") return ClassTag::I;
    if (name == "II") return ClassTag::II;
    if (name == "III") return ClassTag::III;
    return std::nullopt;
}

double CbcSample::value(IndexId id) const {
    switch (id) {
        case IndexId::Rbc: return rbc;
        case IndexId::Hb: return hb;
        case IndexId::Hct: return hct;
        case IndexId::Mcv: return mcv;
        case IndexId::Mch: return mch;
        case IndexId::Mchc: return mchc;
    }
    return 0.0;
}

void CbcSample::validate() const {
    for (IndexId id : kAllIndices) {
        double v = value(id);
        if (!std::isfinite(v) || v <= 0.0) {
            throw DataError("invalid value for " + std::string(index_name(id)) +
                            ": must be finite and strictly positive");
        }
    }
    if (rdw && (!std::isfinite(*rdw) || *rdw <= 0.0)) {
        throw DataError("invalid value for RDW: must be finite and strictly positive");
    }
    if (label && class_tag) {
        bool is_normal = *label == Label::Normal;
        bool is_class_one = *class_tag == ClassTag::I;
        if (is_normal != is_class_one) {
            throw DataError("label/class mismatch: NORMAL must pair with class I");
        }
    }
}

const NormalRanges& default_normal_ranges() {
    static const NormalRanges ranges = {{
        {IndexId::Rbc, 4.5, 6.3},
        {IndexId::Hb, 13.5, 18.0},
        {IndexId::Hct, 39.0, 50.0},
        {IndexId::Mcv, 80.0, 96.0},
        {IndexId::Mch, 27.0, 32.0},
        {IndexId::Mchc, 32.0, 38.0},
    }};
    return ranges;
}

const NormalRange& range_for(const NormalRanges& ranges, IndexId id) {
    return ranges[static_cast<std::size_t>(id)];
}

std::size_t count_label(const Cohort& cohort, Label l) {
    return static_cast<std::size_t>(
        std::count_if(cohort.samples.begin(), cohort.samples.end(),
                      [l](const CbcSample& s) { return s.label && *s.label == l; }));
}

bool contains_label(const Cohort& cohort, Label l) {
    return count_label(cohort, l) > 0;
}

Cohort exclude_normal(const Cohort& cohort) {
    Cohort out;
    out.source = cohort.source;
    for (const CbcSample& s : cohort.samples) {
        if (s.label && *s.label == Label::Normal) continue;
        out.samples.push_back(s);
    }
    return out;
}

SplitResult split(const Cohort& cohort, const SplitSpec& spec) {
    if (spec.train_count < 1 || spec.test_count < 1) {
        throw std::invalid_argument("split: train and test counts must be at least 1");
    }
    if (spec.train_count + spec.test_count > cohort.size()) {
        throw std::invalid_argument("split: requested " +
                                    std::to_string(spec.train_count + spec.test_count) +
                                    " samples from a cohort of " +
                                    std::to_string(cohort.size()));
    }

    std::vector<std::size_t> order(cohort.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(spec.seed);
    for (std::size_t i = cohort.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_index(static_cast<int>(i)));
        std::swap(order[i - 1], order[j]);
    }

    SplitResult result;
    result.train.source = cohort.source + " [train]";
    result.test.source = cohort.source + " [test]";
    for (std::size_t i = 0; i < spec.train_count; ++i) {
        result.train.samples.push_back(cohort.samples[order[i]]);
    }
    for (std::size_t i = 0; i < spec.test_count; ++i) {
        result.test.samples.push_back(cohort.samples[order[spec.train_count + i]]);
    }
    return result;
}

namespace {

CbcSample make_sample(double rbc, double hb, double hct, double mcv, double mch,
                      double mchc, ClassTag tag, Label label) {
    CbcSample s;
    s.rbc = rbc;
    s.hb = hb;
    s.hct = hct;
    s.mcv = mcv;
    s.mch = mch;
    s.mchc = mchc;
    s.class_tag = tag;
    s.label = label;
    return s;
}

} // namespace

const Cohort& table2_cohort() {
    static const Cohort cohort = [] {
        Cohort c;
        c.source = "reference examples";
        auto& v = c.samples;
        v.push_back(make_sample(5.43, 10.2, 34.0, 62.6, 18.8, 30.0, ClassTag::II, Label::Btt));
        v.push_back(make_sample(6.13, 12.5, 40.1, 65.4, 20.4, 31.2, ClassTag::II, Label::Btt));
        v.push_back(make_sample(6.80, 12.6, 43.4, 63.8, 18.5, 29.0, ClassTag::II, Label::Btt));
        v.push_back(make_sample(4.73, 10.1, 38.7, 69.9, 19.7, 30.3, ClassTag::II, Label::Ida));
        v.push_back(make_sample(4.13, 8.2, 38.4, 71.8, 19.9, 28.9, ClassTag::II, Label::Ida));
        v.push_back(make_sample(4.61, 12.8, 38.9, 84.4, 27.8, 32.9, ClassTag::I, Label::Normal));
        v.push_back(make_sample(4.36, 13.1, 39.7, 91.1, 30.0, 33.0, ClassTag::I, Label::Normal));
        v.push_back(make_sample(4.77, 13.3, 39.7, 83.2, 27.9, 33.5, ClassTag::I, Label::Normal));
        v.push_back(make_sample(3.99, 11.4, 35.1, 88.0, 28.6, 32.5, ClassTag::I, Label::Normal));
        v.push_back(make_sample(4.40, 13.7, 40.5, 92.0, 31.1, 33.8, ClassTag::I, Label::Normal));
        v.push_back(make_sample(6.62, 13.1, 43.9, 65.9, 19.7, 29.8, ClassTag::III, Label::Btt));
        v.push_back(make_sample(4.56, 10.3, 34.7, 76.1, 22.6, 29.7, ClassTag::III, Label::Btt));
        v.push_back(make_sample(5.95, 12.5, 43.4, 72.8, 21.0, 28.9, ClassTag::III, Label::Btt));
        v.push_back(make_sample(4.65, 10.5, 35.6, 76.6, 22.6, 29.5, ClassTag::III, Label::Btt));
        v.push_back(make_sample(5.12, 10.6, 36.7, 71.7, 20.7, 28.9, ClassTag::III, Label::Btt));
        v.push_back(make_sample(4.81, 11.6, 37.6, 78.2, 24.1, 30.9, ClassTag::III, Label::Ida));
        v.push_back(make_sample(5.05, 11.5, 38.8, 76.8, 22.8, 29.6, ClassTag::III, Label::Ida));
        v.push_back(make_sample(4.88, 12.1, 38.8, 79.5, 24.8, 31.2, ClassTag::III, Label::Ida));
        v.push_back(make_sample(5.03, 12.7, 39.9, 79.3, 25.2, 31.8, ClassTag::III, Label::Ida));
        v.push_back(make_sample(5.10, 13.2, 39.7, 77.8, 25.9, 30.7, ClassTag::III, Label::Ida));
        return c;
    }();
    return cohort;
}

} // namespace anemiadx
