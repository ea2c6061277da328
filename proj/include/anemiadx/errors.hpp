#ifndef ANEMIADX_ERRORS_HPP
#define ANEMIADX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anemiadx {

// Malformed or inconsistent input data: CSV parse failures, model file
// corruption, cohorts that violate an operation's data preconditions.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric degeneration discovered while computing: overflowing tree
// evaluation at prediction time, calibration on a constant discriminator,
// degenerate scaling statistics.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace anemiadx

#endif
