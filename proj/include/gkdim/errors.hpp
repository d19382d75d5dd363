#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gkdim {

// Malformed text input (weights, rationals, flag values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A (p,q) context that does not match the weight it is paired with.
class InvalidContext : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands of incompatible sizes (permutations of different n, ...).
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed. `precondition` is a short stable tag
// ("pq_dominant", "integral", "unitary_point", ...); `indices` optionally
// names the offending 1-based positions.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string precondition, const std::string& message,
              std::optional<std::pair<std::size_t, std::size_t>> indices = std::nullopt)
      : std::domain_error(message),
        precondition_(std::move(precondition)),
        indices_(indices) {}

  const std::string& precondition() const { return precondition_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& indices() const { return indices_; }

 private:
  std::string precondition_;
  std::optional<std::pair<std::size_t, std::size_t>> indices_;
};

// The Hecke-algebra oracle was asked for a rank above its configured bound.
class OracleScopeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace gkdim
