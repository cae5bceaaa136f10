#pragma once

#include <stdexcept>
#include <string>

namespace pointfree {

// Base class for everything thrown on purpose by this library.
// The CLI maps subclasses onto exit codes, so keep the taxonomy flat:
// resource_error covers every bounded-search giving up, input_error covers
// malformed documents and violated structural preconditions.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : error {
  using error::error;
};

struct fuel_exhausted : resource_error {
  explicit fuel_exhausted(const std::string& msg) : resource_error(msg) {}
};

struct depth_exhausted : resource_error {
  explicit depth_exhausted(const std::string& msg) : resource_error(msg) {}
};

struct base_too_large : resource_error {
  explicit base_too_large(const std::string& msg) : resource_error(msg) {}
};

struct enumeration_too_large : resource_error {
  explicit enumeration_too_large(const std::string& msg) : resource_error(msg) {}
};

struct input_error : error {
  using error::error;
};

struct parse_error : input_error {
  explicit parse_error(const std::string& msg) : input_error(msg) {}
};

struct malformed_tree : input_error {
  explicit malformed_tree(const std::string& msg) : input_error(msg) {}
};

struct invalid_spread : input_error {
  explicit invalid_spread(const std::string& msg) : input_error(msg) {}
};

struct concrete_space_invalid : input_error {
  explicit concrete_space_invalid(const std::string& msg) : input_error(msg) {}
};

struct invalid_topology : input_error {
  explicit invalid_topology(const std::string& msg) : input_error(msg) {}
};

struct not_single_valued : input_error {
  explicit not_single_valued(const std::string& msg) : input_error(msg) {}
};

struct empty_required : input_error {
  explicit empty_required(const std::string& msg) : input_error(msg) {}
};

// A certificate was requested for a cover that does not hold. Deliberately
// neither an input_error nor a resource_error: the input is well formed and
// the search finished, the answer is just "no".
struct not_coverable : error {
  explicit not_coverable(const std::string& msg) : error(msg) {}
};

struct arithmetic_overflow : error {
  explicit arithmetic_overflow(const std::string& msg) : error(msg) {}
};

}  // namespace pointfree
