#include "anemiadx/baselines.hpp"

#include "anemiadx/errors.hpp"

namespace anemiadx {

namespace {

constexpr std::array<TraditionalIndexInfo, 7> kInfos = {{
    {TraditionalIndexId::Mi, "MI", "MCV/RBC", 13.0, true, false},
    {TraditionalIndexId::Efi, "E&FI", "MCV-RBC-5*Hb-3.4", 0.0, true, false},
    {TraditionalIndexId::Sbi, "S&BI", "MCH/RBC", 3.8, true, false},
    {TraditionalIndexId::Sli, "S&LI", "MCV^2*MCH*0.01", 1530.0, true, false},
    {TraditionalIndexId::Si, "SI", "MCV-RBC-3*Hb", 27.0, true, false},
    {TraditionalIndexId::Ei, "EI", "MCV-10*RBC", 15.0, true, false},
    {TraditionalIndexId::Gki, "G&KI", "MCV^2*RDW*Hb*0.01", 72.0, true, true},
}};

} // namespace

const TraditionalIndexInfo& traditional_index_info(TraditionalIndexId id) {
    return kInfos[static_cast<std::size_t>(id)];
}

double index_value(TraditionalIndexId id, const CbcSample& sample) {
    switch (id) {
        case TraditionalIndexId::Mi:
            return sample.mcv / sample.rbc;
        case TraditionalIndexId::Efi:
            return sample.mcv - sample.rbc - 5.0 * sample.hb - 3.4;
        case TraditionalIndexId::Sbi:
            return sample.mch / sample.rbc;
        case TraditionalIndexId::Sli:
            return sample.mcv * sample.mcv * sample.mch * 0.01;
        case TraditionalIndexId::Si:
            return sample.mcv - sample.rbc - 3.0 * sample.hb;
        case TraditionalIndexId::Ei:
            return sample.mcv - 10.0 * sample.rbc;
        case TraditionalIndexId::Gki:
            if (!sample.rdw) {
                throw DataError("G&KI requires RDW, which is missing from the sample");
            }
            return sample.mcv * sample.mcv * *sample.rdw * sample.hb * 0.01;
    }
    throw DataError("unknown traditional index");
}

Label classify(TraditionalIndexId id, const CbcSample& sample) {
    const TraditionalIndexInfo& info = traditional_index_info(id);
    double value = index_value(id, sample);
    bool ida = info.ida_at_or_above ? value >= info.cutoff : value < info.cutoff;
    return ida ? Label::Ida : Label::Btt;
}

bool applicable(TraditionalIndexId id, const CbcSample& sample) {
    return !traditional_index_info(id).needs_rdw || sample.rdw.has_value();
}

} // namespace anemiadx
