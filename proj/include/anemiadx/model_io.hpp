#ifndef ANEMIADX_MODEL_IO_HPP
#define ANEMIADX_MODEL_IO_HPP

#include <filesystem>
#include <string>

#include "anemiadx/discriminator.hpp"

namespace anemiadx {

// Line-oriented key=value model document, numbers written with shortest
// round-trip precision and guarded by an FNV-1a checksum line, so
// load(save(m)) reproduces every field exactly.
std::string model_to_string(const TrainedModel& model);
TrainedModel model_from_string(const std::string& text);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

inline constexpr int kModelFormatVersion = 1;

} // namespace anemiadx

#endif
