#ifndef PRANDTL_ERRORS_HPP
#define PRANDTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prandtl {

/// Invalid user-facing input: a parameter outside its admissible range,
/// a malformed config file, or a precondition violated by the caller.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation that cannot produce a meaningful result on the given data,
/// e.g. a non-monotone profile handed to the Crocco map.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The time-marching solver produced NaN/Inf or left its admissible state.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

}  // namespace prandtl

#endif  // PRANDTL_ERRORS_HPP
