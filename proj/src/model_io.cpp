#include "anemiadx/model_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "anemiadx/csv_io.hpp"
#include "anemiadx/errors.hpp"

namespace anemiadx {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, 16);
    return std::string(buf, res.ptr);
}

double parse_double_field(const std::map<std::string, std::string>& fields,
                          const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw DataError("model file: missing field " + key);
    }
    double value = 0.0;
    const char* first = it->second.data();
    const char* last = first + it->second.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DataError("model file: malformed field " + key + " = '" + it->second + "'");
    }
    return value;
}

long parse_long_field(const std::map<std::string, std::string>& fields,
                      const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw DataError("model file: missing field " + key);
    }
    long value = 0;
    const char* first = it->second.data();
    const char* last = first + it->second.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DataError("model file: malformed field " + key + " = '" + it->second + "'");
    }
    return value;
}

std::uint64_t parse_u64_field(const std::map<std::string, std::string>& fields,
                              const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw DataError("model file: missing field " + key);
    }
    std::uint64_t value = 0;
    const char* first = it->second.data();
    const char* last = first + it->second.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DataError("model file: malformed field " + key + " = '" + it->second + "'");
    }
    return value;
}

bool parse_bool_field(const std::map<std::string, std::string>& fields,
                      const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw DataError("model file: missing field " + key);
    }
    if (it->second == "true") return true;
    if (it->second == "false") return false;
    throw DataError("model file: malformed field " + key + " = '" + it->second + "'");
}

} // namespace

std::string model_to_string(const TrainedModel& model) {
    std::ostringstream out;
    out << "format_version=" << kModelFormatVersion << '\n';
    out << "scheme_id=" << model.genome.scheme_id << '\n';
    for (int i = 0; i < kCoefficientCount; ++i) {
        out << "coef_" << i << '='
            << format_double(model.genome.coefficients[static_cast<std::size_t>(i)])
            << '\n';
    }
    out << "threshold=" << format_double(model.threshold) << '\n';
    out << "ida_above=" << (model.ida_above ? "true" : "false") << '\n';
    out << "selected=";
    for (std::size_t slot = 0; slot < 4; ++slot) {
        if (slot > 0) out << ',';
        out << index_name(model.selected[slot]);
    }
    out << '\n';
    for (std::size_t slot = 0; slot < 4; ++slot) {
        std::string name(index_name(model.selected[slot]));
        out << "scale_" << name << "_min=" << format_double(model.scaling.min[slot]) << '\n';
        out << "scale_" << name << "_max=" << format_double(model.scaling.max[slot]) << '\n';
    }
    out << "seed=" << model.seed << '\n';
    out << "improvisations=" << model.improvisations << '\n';
    out << "hms=" << model.hms << '\n';
    out << "dynamic=" << (model.dynamic ? "true" : "false") << '\n';
    out << "final_fitness=" << format_double(model.final_fitness) << '\n';
    std::string body = out.str();
    return body + "checksum=" + hex64(fnv1a64(body)) + '\n';
}

TrainedModel model_from_string(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::string body_before_checksum;
    std::string checksum_value;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DataError("model file: malformed line '" + line + "'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "checksum") {
            checksum_value = value;
            continue;
        }
        if (!checksum_value.empty()) {
            throw DataError("model file: content after checksum line");
        }
        if (!fields.emplace(key, value).second) {
            throw DataError("model file: duplicate field " + key);
        }
        body_before_checksum += line + '\n';
    }

    long version = parse_long_field(fields, "format_version");
    if (version != kModelFormatVersion) {
        throw DataError("model file: unsupported format_version " +
                        std::to_string(version));
    }
    if (checksum_value.empty()) {
        throw DataError("model file: missing field checksum");
    }
    if (checksum_value != hex64(fnv1a64(body_before_checksum))) {
        throw DataError("model file: checksum mismatch");
    }

    TrainedModel model;
    model.genome.scheme_id = static_cast<int>(parse_long_field(fields, "scheme_id"));
    if (model.genome.scheme_id < 0 || model.genome.scheme_id >= kSchemeCount) {
        throw DataError("model file: scheme_id out of range");
    }
    for (int i = 0; i < kCoefficientCount; ++i) {
        model.genome.coefficients[static_cast<std::size_t>(i)] =
            parse_double_field(fields, "coef_" + std::to_string(i));
    }
    model.threshold = parse_double_field(fields, "threshold");
    model.ida_above = parse_bool_field(fields, "ida_above");

    auto sel_it = fields.find("selected");
    if (sel_it == fields.end()) {
        throw DataError("model file: missing field selected");
    }
    std::vector<IndexId> selected;
    std::string token;
    std::istringstream sel_in(sel_it->second);
    while (std::getline(sel_in, token, ',')) {
        auto id = index_from_name(token);
        if (!id) {
            throw DataError("model file: malformed field selected, unknown index '" +
                            token + "'");
        }
        selected.push_back(*id);
    }
    if (selected.size() != 4) {
        throw DataError("model file: selected must list exactly 4 indices");
    }
    for (std::size_t slot = 0; slot < 4; ++slot) {
        model.selected[slot] = selected[slot];
        std::string name(index_name(selected[slot]));
        model.scaling.min[slot] = parse_double_field(fields, "scale_" + name + "_min");
        model.scaling.max[slot] = parse_double_field(fields, "scale_" + name + "_max");
    }

    model.seed = parse_u64_field(fields, "seed");
    model.improvisations = parse_long_field(fields, "improvisations");
    model.hms = static_cast<int>(parse_long_field(fields, "hms"));
    model.dynamic = parse_bool_field(fields, "dynamic");
    model.final_fitness = parse_double_field(fields, "final_fitness");
    return model;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
    write_file_atomic(path, model_to_string(model));
}

TrainedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_string(buf.str());
}

} // namespace anemiadx
