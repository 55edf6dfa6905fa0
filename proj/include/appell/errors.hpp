#pragma once

#include <stdexcept>
#include <string>

namespace appell {

/// Raised when an operation is called outside its mathematical domain
/// (zero denominator, non-unit series, x outside a Fourier range, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace appell
