#include "anemiadx/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "anemiadx/rng.hpp"

namespace anemiadx {

namespace {

ClassDistributions compute_distributions(Label label) {
    const Cohort& ref = table2_cohort();
    ClassDistributions dist{};
    for (std::size_t i = 0; i < kAllIndices.size(); ++i) {
        IndexId id = kAllIndices[i];
        double sum = 0.0;
        std::size_t n = 0;
        for (const CbcSample& s : ref.samples) {
            if (s.class_tag == ClassTag::III && s.label == label) {
                sum += s.value(id);
                ++n;
            }
        }
        double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (const CbcSample& s : ref.samples) {
            if (s.class_tag == ClassTag::III && s.label == label) {
                double d = s.value(id) - mean;
                ss += d * d;
            }
        }
        dist[i] = {mean, std::sqrt(ss / static_cast<double>(n - 1))};
    }
    return dist;
}

} // namespace

const ClassDistributions& ida_distributions() {
    static const ClassDistributions dist = compute_distributions(Label::Ida);
    return dist;
}

const ClassDistributions& btt_distributions() {
    static const ClassDistributions dist = compute_distributions(Label::Btt);
    return dist;
}

Cohort generate_synthetic_cohort(std::size_t n_ida, std::size_t n_btt,
                                 std::uint64_t seed) {
    if (n_ida < 1 || n_btt < 1) {
        throw std::invalid_argument("synthetic cohort needs at least 1 sample per class");
    }
    Rng rng(seed);
    Cohort cohort;
    cohort.source = "synthetic seed=" + std::to_string(seed);
    cohort.samples.reserve(n_ida + n_btt);

    auto emit = [&](Label label, const ClassDistributions& dist, std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            CbcSample s;
            for (std::size_t i = 0; i < kAllIndices.size(); ++i) {
                double v = rng.gaussian(dist[i].mean, dist[i].stddev);
                while (v <= 0.0) {
                    v = rng.gaussian(dist[i].mean, dist[i].stddev);
                }
                switch (kAllIndices[i]) {
                    case IndexId::Rbc: s.rbc = v; break;
                    case IndexId::Hb: s.hb = v; break;
                    case IndexId::Hct: s.hct = v; break;
                    case IndexId::Mcv: s.mcv = v; break;
                    case IndexId::Mch: s.mch = v; break;
                    case IndexId::Mchc: s.mchc = v; break;
                }
            }
            s.label = label;
            s.class_tag = ClassTag::III;
            cohort.samples.push_back(s);
        }
    };
    emit(Label::Ida, ida_distributions(), n_ida);
    emit(Label::Btt, btt_distributions(), n_btt);
    return cohort;
}

} // namespace anemiadx
