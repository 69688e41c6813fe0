#pragma once

#include <stdexcept>
#include <string>

namespace linkform {

/// Precondition violation on caller-supplied data (coprimality, shape, range).
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A bounded search ran out of budget before finding a witness.
class SearchLimitExceeded : public std::runtime_error {
public:
  explicit SearchLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrix : public std::domain_error {
public:
  explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

/// Request outside the implemented envelope (e.g. large isomorphism tests).
class Unsupported : public std::runtime_error {
public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linkform
