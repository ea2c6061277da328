#ifndef ANEMIADX_CSV_IO_HPP
#define ANEMIADX_CSV_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "anemiadx/cbc.hpp"

namespace anemiadx {

// Cohort CSV dialect: comma separator, dot decimal, one header row. The
// header must name RBC,Hb,HCT,MCV,MCH,MCHC; RDW, label and class columns are
// optional. Label tokens are IDA/BTT/NORMAL, class tokens I/II/III; empty
// cells in optional columns yield absent fields.
Cohort load_cohort_csv(const std::filesystem::path& path);
Cohort parse_cohort_csv(std::istream& in, const std::string& source);

// Writes the six index columns always, RDW/label/class only when some sample
// carries them. Numbers are written with shortest round-trip precision, so
// load(write(c)) reproduces every value bit for bit.
std::string cohort_to_csv(const Cohort& cohort);
void write_cohort_csv(const Cohort& cohort, const std::filesystem::path& path);

// Whole-file atomic write: content goes to a temporary sibling first and is
// renamed over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Shortest decimal representation that parses back to exactly the same double.
std::string format_double(double value);

} // namespace anemiadx

#endif
