#pragma once

#include <stdexcept>
#include <string>

namespace tcurv {

/// Metric is singular or otherwise unusable where a nondegenerate one is required.
class invalid_metric_error : public std::runtime_error {
public:
  explicit invalid_metric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The frame is not adapted to the structure (xi must be a frame basis vector
/// and eta must annihilate every other basis vector).
class adapted_frame_error : public std::runtime_error {
public:
  explicit adapted_frame_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was invoked on input that fails its upstream validation gate.
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Manifest text could not be parsed; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace tcurv
