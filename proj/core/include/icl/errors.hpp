#ifndef ICL_ERRORS_HPP
#define ICL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icl {

// Coil or array parameters that violate a geometric invariant.
class InvalidGeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A filament pair came closer than the configured singularity floor.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input file. Carries the 1-based line the parser stopped at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bad or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Not enough payload bits left to fill a frame.
class PayloadUnderrun : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace icl

#endif  // ICL_ERRORS_HPP
