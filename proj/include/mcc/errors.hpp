#ifndef MCC_ERRORS_HPP
#define MCC_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcc {

/// Malformed grid: ragged rows, zero dimensions, mismatched concatenation.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not follow the PDA text format.
class FormatError : public StructuralError {
public:
  using StructuralError::StructuralError;
};

enum class ParamErrorKind {
  not_positive,
  k_not_dividing_K,
  block_not_dividing_K,
  trivial_regime,
  degenerate_block_count,
};

inline const char* to_string(ParamErrorKind kind) {
  switch (kind) {
    case ParamErrorKind::not_positive: return "not-positive";
    case ParamErrorKind::k_not_dividing_K: return "k-not-dividing-K";
    case ParamErrorKind::block_not_dividing_K: return "block-not-dividing-K";
    case ParamErrorKind::trivial_regime: return "trivial-regime";
    case ParamErrorKind::degenerate_block_count: return "degenerate-block-count";
  }
  return "unknown";
}

class ParamError : public std::invalid_argument {
public:
  ParamError(ParamErrorKind kind, const std::string& what)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ParamErrorKind kind() const noexcept { return kind_; }

private:
  ParamErrorKind kind_;
};

/// Array handed to delivery does not satisfy the PDA conditions.
class InvalidPdaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A user could not recover a sub-file: a needed sub-file lies outside the
/// user's accessible cache content. symbol() is absent when the sub-file was
/// expected directly from the cache.
class DecodeError : public std::runtime_error {
public:
  DecodeError(std::optional<std::size_t> symbol, std::size_t user, const std::string& what)
      : std::runtime_error(what), symbol_(symbol), user_(user) {}

  std::optional<std::size_t> symbol() const noexcept { return symbol_; }
  std::size_t user() const noexcept { return user_; }

private:
  std::optional<std::size_t> symbol_;
  std::size_t user_;
};

}  // namespace mcc

#endif  // MCC_ERRORS_HPP
