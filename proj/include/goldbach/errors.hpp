#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

// Caller broke a documented precondition (bad residue, odd modulus, limit
// past the table, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A request would exceed a configured resource budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem read/write failure (cache directory, output files).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace goldbach
