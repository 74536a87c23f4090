#ifndef RADBC_ERRORS_HPP
#define RADBC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace radbc {

// Base for all numerical failures raised by this library. `kind()` is a
// stable machine-readable tag (used verbatim in CLI error JSON).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DivisionNearZero : public Error {
 public:
  explicit DivisionNearZero(const std::string& what) : Error("DivisionNearZero", what) {}
};

class PoleProximity : public Error {
 public:
  explicit PoleProximity(const std::string& what) : Error("PoleProximity", what) {}
};

class ToleranceNotMet : public Error {
 public:
  explicit ToleranceNotMet(const std::string& what) : Error("ToleranceNotMet", what) {}
};

class UnknownFunction : public Error {
 public:
  explicit UnknownFunction(const std::string& what) : Error("UnknownFunction", what) {}
};

class DegenerateBound : public Error {
 public:
  explicit DegenerateBound(const std::string& what) : Error("DegenerateBound", what) {}
};

class InstabilityDetected : public Error {
 public:
  explicit InstabilityDetected(const std::string& what) : Error("InstabilityDetected", what) {}
};

class SingularStencil : public Error {
 public:
  explicit SingularStencil(const std::string& what) : Error("SingularStencil", what) {}
};

class OrderTooHigh : public Error {
 public:
  explicit OrderTooHigh(const std::string& what) : Error("OrderTooHigh", what) {}
};

class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& what) : Error("ResolutionError", what) {}
};

// Invalid simulation configuration. Carries every violated invariant, not
// just the first one found.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations)
      : Error("ConfigError", join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid configuration:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace radbc

#endif  // RADBC_ERRORS_HPP
