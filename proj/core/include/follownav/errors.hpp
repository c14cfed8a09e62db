#pragma once

#include <stdexcept>
#include <string>

namespace follownav {

// Base for all errors raised by the library. Callers that only need a
// success/data-error split can catch this one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: config files, scenario files, CSV rows.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally valid input with out-of-range or inconsistent values.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Geometric query from an impossible pose, e.g. a sensor origin inside
// an occluder disc.
struct DegeneratePoseError : Error {
  explicit DegeneratePoseError(const std::string& msg) : Error(msg) {}
};

}  // namespace follownav
