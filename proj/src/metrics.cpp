#include "anemiadx/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "anemiadx/errors.hpp"

namespace anemiadx {

ConfusionMatrix confusion(std::span<const Label> predictions,
                          std::span<const Label> truths) {
    if (predictions.size() != truths.size()) {
        throw DataError("confusion: prediction and truth lengths differ");
    }
    if (predictions.empty()) {
        throw DataError("confusion: empty label sequences");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] == Label::Normal || truths[i] == Label::Normal) {
            throw DataError("confusion: NORMAL label is not part of the "
                            "IDA/BTT discrimination task");
        }
        bool pred_ida = predictions[i] == Label::Ida;
        bool true_ida = truths[i] == Label::Ida;
        if (pred_ida && true_ida) ++cm.tp;
        else if (!pred_ida && !true_ida) ++cm.tn;
        else if (pred_ida) ++cm.fp;
        else ++cm.fn;
    }
    return cm;
}

MetricReport report(const ConfusionMatrix& cm) {
    if (cm.total() < 1) {
        throw DataError("metrics: empty confusion matrix");
    }
    MetricReport r;
    auto ratio = [](long num, long den) -> std::optional<double> {
        if (den == 0) return std::nullopt;
        return 100.0 * static_cast<double>(num) / static_cast<double>(den);
    };
    r.sens = ratio(cm.tp, cm.tp + cm.fn);
    r.spec = ratio(cm.tn, cm.tn + cm.fp);
    r.ppv = ratio(cm.tp, cm.tp + cm.fp);
    r.npv = ratio(cm.tn, cm.tn + cm.fn);
    r.acc = 100.0 * static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    if (r.sens && r.spec) {
        r.yi = *r.sens + *r.spec - 100.0;
    }
    return r;
}

double round1(double value) {
    return std::round(value * 10.0) / 10.0;
}

std::string format_metric(std::optional<double> value) {
    if (!value) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", round1(*value));
    return buf;
}

void print_report_text(std::ostream& out, std::string_view method,
                       const ConfusionMatrix& cm, const MetricReport& r) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-12.*s TP=%-4ld TN=%-4ld FP=%-4ld FN=%-4ld "
                  "SENS=%-6s SPEC=%-6s PPV=%-6s NPV=%-6s ACC=%-6s YI=%s",
                  static_cast<int>(method.size()), method.data(),
                  cm.tp, cm.tn, cm.fp, cm.fn,
                  format_metric(r.sens).c_str(), format_metric(r.spec).c_str(),
                  format_metric(r.ppv).c_str(), format_metric(r.npv).c_str(),
                  format_metric(r.acc).c_str(), format_metric(r.yi).c_str());
    out << line << '\n';
}

void write_metrics_csv_header(std::ostream& out) {
    out << "method,tp,tn,fp,fn,sens,spec,ppv,npv,acc,yi\n";
}

namespace {

std::string csv_metric(std::optional<double> value) {
    return value ? format_metric(value) : std::string();
}

} // namespace

void write_metrics_csv_row(std::ostream& out, std::string_view method,
                           const ConfusionMatrix& cm, const MetricReport& r) {
    out << method << ',' << cm.tp << ',' << cm.tn << ',' << cm.fp << ',' << cm.fn
        << ',' << csv_metric(r.sens) << ',' << csv_metric(r.spec) << ','
        << csv_metric(r.ppv) << ',' << csv_metric(r.npv) << ','
        << csv_metric(r.acc) << ',' << csv_metric(r.yi) << '\n';
}

} // namespace anemiadx
