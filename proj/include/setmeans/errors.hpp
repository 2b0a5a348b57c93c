#ifndef SETMEANS_ERRORS_HPP
#define SETMEANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace setmeans {

struct InvalidAtomError : std::runtime_error {
  explicit InvalidAtomError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySetError : std::runtime_error {
  explicit EmptySetError(const std::string& what = "operation requires a nonempty set")
      : std::runtime_error(what) {}
};

// A Cantor cut point never reached a ternary gap within the depth limit.
struct ApproximationDepthError : std::runtime_error {
  explicit ApproximationDepthError(const std::string& what) : std::runtime_error(what) {}
};

// Two atoms overlap in a way that has no exact normal form in this class
// (e.g. two harmonic sequences sharing a limit with non-integer ratio).
struct UnsupportedOverlapError : std::runtime_error {
  explicit UnsupportedOverlapError(const std::string& what) : std::runtime_error(what) {}
};

// The set has Hausdorff dimension 0 but infinitely many points, so no
// finite counting measure exists.
struct NotAnSSetError : std::runtime_error {
  explicit NotAnSSetError(const std::string& what = "countably infinite set has no finite 0-dimensional measure")
      : std::runtime_error(what) {}
};

// A piecewise-linear breakpoint lands inside a Cantor piece at a point
// that is not a ternary gap endpoint.
struct NonPLBreakOnCantorError : std::runtime_error {
  explicit NonPLBreakOnCantorError(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfDomainError : std::runtime_error {
  std::string reason;
  explicit OutOfDomainError(const std::string& r)
      : std::runtime_error("set out of mean domain: " + r), reason(r) {}
};

struct UnknownMeanError : std::runtime_error {
  explicit UnknownMeanError(const std::string& id) : std::runtime_error("unknown mean: " + id) {}
};

struct NoSignChangeError : std::runtime_error {
  explicit NoSignChangeError(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace setmeans

#endif
