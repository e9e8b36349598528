#pragma once

#include <stdexcept>
#include <string>

namespace ringsw {

// A routing request that cannot be realized within the tuning range or the
// drop-efficiency budget of the device.
class InfeasiblePlanError : public std::runtime_error {
 public:
  explicit InfeasiblePlanError(const std::string& what) : std::runtime_error(what) {}
};

class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringsw
