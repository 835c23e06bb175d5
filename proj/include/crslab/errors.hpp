#pragma once

#include <stdexcept>
#include <string>

namespace crslab {

// Invalid argument or malformed input. The CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured enumeration or size cap would be exceeded. Exit code 3.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; never expected on valid inputs. Exit code 4.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace crslab
