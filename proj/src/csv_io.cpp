#include "anemiadx/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "anemiadx/errors.hpp"

namespace anemiadx {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        if (!out.flush()) {
            throw DataError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw DataError("cannot rename " + tmp.string() + " to " + path.string() +
                        ": " + ec.message());
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (ch != '\r') {
            cell += ch;
        }
    }
    cells.push_back(cell);
    return cells;
}

double parse_number(const std::string& cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DataError("row " + std::to_string(row) + ", column " + column +
                        ": malformed number '" + cell + "'");
    }
    return value;
}

struct ColumnLayout {
    std::array<int, 6> index_col; // position of each IndexId, -1 if missing
    int rdw_col = -1;
    int label_col = -1;
    int class_col = -1;
    std::size_t width = 0;
};

ColumnLayout parse_header(const std::string& line) {
    ColumnLayout layout;
    layout.index_col.fill(-1);
    auto cells = split_line(line);
    layout.width = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string& name = cells[i];
        int pos = static_cast<int>(i);
        if (auto id = index_from_name(name)) {
            int& slot = layout.index_col[static_cast<std::size_t>(*id)];
            if (slot != -1) throw DataError("duplicate column " + name);
            slot = pos;
        } else if (name == "RDW") {
            if (layout.rdw_col != -1) throw DataError("duplicate column RDW");
            layout.rdw_col = pos;
        } else if (name == "label") {
            if (layout.label_col != -1) throw DataError("duplicate column label");
            layout.label_col = pos;
        } else if (name == "class") {
            if (layout.class_col != -1) throw DataError("duplicate column class");
            layout.class_col = pos;
        } else {
            throw DataError("unknown column '" + name + "' in header");
        }
    }
    for (IndexId id : kAllIndices) {
        if (layout.index_col[static_cast<std::size_t>(id)] == -1) {
            throw DataError("missing mandatory column " + std::string(index_name(id)));
        }
    }
    return layout;
}

} // namespace

Cohort parse_cohort_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(source + ": empty file, expected a header row");
    }
    ColumnLayout layout = parse_header(line);

    Cohort cohort;
    cohort.source = source;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row;
        auto cells = split_line(line);
        if (cells.size() != layout.width) {
            throw DataError("row " + std::to_string(row) + ": expected " +
                            std::to_string(layout.width) + " cells, found " +
                            std::to_string(cells.size()));
        }
        CbcSample s;
        for (IndexId id : kAllIndices) {
            int col = layout.index_col[static_cast<std::size_t>(id)];
            std::string column(index_name(id));
            const std::string& cell = cells[static_cast<std::size_t>(col)];
            if (cell.empty()) {
                throw DataError("row " + std::to_string(row) + ", column " + column +
                                ": empty cell in mandatory column");
            }
            double v = parse_number(cell, row, column);
            switch (id) {
                case IndexId::Rbc: s.rbc = v; break;
                case IndexId::Hb: s.hb = v; break;
                case IndexId::Hct: s.hct = v; break;
                case IndexId::Mcv: s.mcv = v; break;
                case IndexId::Mch: s.mch = v; break;
                case IndexId::Mchc: s.mchc = v; break;
            }
        }
        if (layout.rdw_col != -1) {
            const std::string& cell = cells[static_cast<std::size_t>(layout.rdw_col)];
            if (!cell.empty()) s.rdw = parse_number(cell, row, "RDW");
        }
        if (layout.label_col != -1) {
            const std::string& cell = cells[static_cast<std::size_t>(layout.label_col)];
            if (!cell.empty()) {
                auto l = label_from_name(cell);
                if (!l) {
                    throw DataError("row " + std::to_string(row) +
                                    ", column label: unknown label token '" + cell + "'");
                }
                s.label = *l;
            }
        }
        if (layout.class_col != -1) {
            const std::string& cell = cells[static_cast<std::size_t>(layout.class_col)];
            if (!cell.empty()) {
                auto t = class_tag_from_name(cell);
                if (!t) {
                    throw DataError("row " + std::to_string(row) +
                                    ", column class: unknown class token '" + cell + "'");
                }
                s.class_tag = *t;
            }
        }
        try {
            s.validate();
        } catch (const DataError& e) {
            throw DataError("row " + std::to_string(row) + ": " + e.what());
        }
        cohort.samples.push_back(std::move(s));
    }
    if (cohort.empty()) {
        throw DataError(source + ": empty cohort");
    }
    return cohort;
}

Cohort load_cohort_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return parse_cohort_csv(in, path.string());
}

std::string cohort_to_csv(const Cohort& cohort) {
    bool any_rdw = std::any_of(cohort.samples.begin(), cohort.samples.end(),
                               [](const CbcSample& s) { return s.rdw.has_value(); });
    bool any_label = std::any_of(cohort.samples.begin(), cohort.samples.end(),
                                 [](const CbcSample& s) { return s.label.has_value(); });
    bool any_class = std::any_of(cohort.samples.begin(), cohort.samples.end(),
                                 [](const CbcSample& s) { return s.class_tag.has_value(); });

    std::ostringstream out;
    out << "RBC,Hb,HCT,MCV,MCH,MCHC";
    if (any_rdw) out << ",RDW";
    if (any_label) out << ",label";
    if (any_class) out << ",class";
    out << '\n';

    for (const CbcSample& s : cohort.samples) {
        out << format_double(s.rbc) << ',' << format_double(s.hb) << ','
            << format_double(s.hct) << ',' << format_double(s.mcv) << ','
            << format_double(s.mch) << ',' << format_double(s.mchc);
        if (any_rdw) {
            out << ',';
            if (s.rdw) out << format_double(*s.rdw);
        }
        if (any_label) {
            out << ',';
            if (s.label) out << label_name(*s.label);
        }
        if (any_class) {
            out << ',';
            if (s.class_tag) out << class_tag_name(*s.class_tag);
        }
        out << '\n';
    }
    return out.str();
}

void write_cohort_csv(const Cohort& cohort, const std::filesystem::path& path) {
    write_file_atomic(path, cohort_to_csv(cohort));
}

} // namespace anemiadx
