#pragma once

#include <stdexcept>
#include <string>

namespace bineuc {

enum class Errc {
  zero_input,
  even_input,
  negative_input,
  not_coprime,
  order,
  invalid_term,
  domain,
  precision_mismatch,
  grid_mismatch,
  stencil,
  config,
  format,
  unavailable,
};

const char* to_string(Errc code) noexcept;

/// Input or configuration rejected before any work is done.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(Errc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A numerical procedure finished but did not meet its quality target
/// (for instance a fixed-point iteration that hit its cap).
class QualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bineuc
