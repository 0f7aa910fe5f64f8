#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: mismatched ambient rings, mixed coefficient fields,
// malformed values. Always a caller bug.
class structural_error : public error {
public:
  explicit structural_error(const std::string& what) : error(what) {}
};

// A documented precondition of an operation does not hold for the inputs.
class precondition_error : public error {
public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

// A mathematical identity that must hold for correct inputs failed while
// assembling results. Indicates either an implementation defect or inputs
// outside the supported regime; the run is aborted with the identity named.
class invariant_violation : public error {
public:
  explicit invariant_violation(const std::string& what) : error(what) {}
};

// Input is well formed but outside what the tool supports.
class unsupported_input_error : public error {
public:
  explicit unsupported_input_error(const std::string& what) : error(what) {}
};

// No polynomial of the requested shape matches the sampled values.
class fitting_error : public error {
public:
  explicit fitting_error(const std::string& what) : error(what) {}
};

// Randomized reduction generation exhausted its retry budget. Carries the
// per-attempt transcript for diagnostics.
class generation_error : public error {
public:
  generation_error(const std::string& what, std::string transcript)
      : error(what), transcript_(std::move(transcript)) {}
  const std::string& transcript() const { return transcript_; }

private:
  std::string transcript_;
};

// Problem-file syntax error with position information.
class parse_error : public error {
public:
  parse_error(const std::string& what, int line, int column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace blowup
