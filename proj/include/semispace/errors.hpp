#ifndef SEMISPACE_ERRORS_HPP
#define SEMISPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semispace {

// Malformed external input (bad JSON, ragged matrix, out-of-range element).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A hypothesis the mathematics requires was violated (tied weight vector,
// loop of the matroid inside I where forbidden, non-generic slice).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree did not (pipeline-level check failed).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable desk-scale limit was exceeded; the computation aborted
// rather than hanging.
class ResourceCutoff : public std::runtime_error {
 public:
  enum class Kind { PairLimit, SupportLimit, IterationLimit };

  ResourceCutoff(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace semispace

#endif
