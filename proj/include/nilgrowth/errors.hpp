#ifndef NILGROWTH_ERRORS_HPP
#define NILGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilgrowth {

/// Caller violated a precondition (bad shape, mismatched bases, non-containment...).
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// A hard budget (points, elements, depth) was exceeded before the answer was found.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An asserted bound failed; carries the counterexample description.
class bound_violation : public std::runtime_error {
 public:
  explicit bound_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nilgrowth

#endif
