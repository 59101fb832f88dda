#pragma once

#include <stdexcept>
#include <string>

namespace hodgecc {

// Arithmetic and precondition violations: modulus mismatch, division by
// zero, non-unit inversion, malformed fixed-locus data, ...
class math_error : public std::runtime_error {
public:
  explicit math_error(const std::string &what) : std::runtime_error(what) {}
};

// det(1 - g*|N^v) is not invertible: some conormal eigenvalue equals 1.
class localization_error : public math_error {
public:
  explicit localization_error(const std::string &what) : math_error(what) {}
};

// Malformed input files, bad payload schemas, unknown scenario kinds.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace hodgecc
