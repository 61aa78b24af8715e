#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// Malformed or out-of-range input (bad file, bad index, degenerate grid).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input that violates a geometric precondition
/// (a point of the discriminant locus, an inadmissible path, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace syz
