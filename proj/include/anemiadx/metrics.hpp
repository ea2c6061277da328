#ifndef ANEMIADX_METRICS_HPP
#define ANEMIADX_METRICS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "anemiadx/cbc.hpp"

namespace anemiadx {

// Counts with IDA as the positive class.
struct ConfusionMatrix {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;

    long total() const { return tp + tn + fp + fn; }
};

// Pairs predictions with ground truth. Only IDA/BTT labels are legal here;
// a NORMAL label or a length mismatch is a data error.
ConfusionMatrix confusion(std::span<const Label> predictions,
                          std::span<const Label> truths);

// The six diagnostic metrics as percentages, kept at full precision. A metric
// whose denominator is zero is absent, never 0. Youden's index exists exactly
// when sensitivity and specificity both do and equals sens + spec - 100.
struct MetricReport {
    std::optional<double> sens;
    std::optional<double> spec;
    std::optional<double> ppv;
    std::optional<double> npv;
    double acc = 0.0;
    std::optional<double> yi;
};

MetricReport report(const ConfusionMatrix& cm);

// Display rounding: half away from zero to one decimal.
double round1(double value);

// "97.1" style display; absent metrics render as "-".
std::string format_metric(std::optional<double> value);

// Aligned text block for one method.
void print_report_text(std::ostream& out, std::string_view method,
                       const ConfusionMatrix& cm, const MetricReport& r);

// CSV columns method,tp,tn,fp,fn,sens,spec,ppv,npv,acc,yi; absent metrics are
// empty cells.
void write_metrics_csv_header(std::ostream& out);
void write_metrics_csv_row(std::ostream& out, std::string_view method,
                           const ConfusionMatrix& cm, const MetricReport& r);

} // namespace anemiadx

#endif
