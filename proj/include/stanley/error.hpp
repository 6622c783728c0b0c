#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stanley {

enum class ErrorCode {
  empty_seed,
  negative_element,
  not_progression_free,
  bad_k,
  overflow,
  capacity_exceeded,
  out_of_range,
  incomplete_prefix,
  empty_range,
  bad_input,
  bad_epsilon,
  too_short,
  too_few_samples,
  degenerate_samples,
  unsupported_k,
  io_failure,
  parse_error,
  consistency_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by seed validation when the input contains a k-term progression.
/// The witness is the lexicographically smallest one by (difference, start).
class ProgressionError : public Error {
 public:
  ProgressionError(std::vector<std::uint64_t> witness, const std::string& message)
      : Error(ErrorCode::not_progression_free, message), witness_(std::move(witness)) {}

  const std::vector<std::uint64_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint64_t> witness_;
};

/// Parse failures carry the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stanley
