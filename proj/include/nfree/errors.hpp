#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nfree {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorKind {
  kValidation,    // malformed input: cycles, bad indices, bad permutations
  kInfeasible,    // a size cap or memory budget was hit
  kPrecondition,  // input is valid but not N-free where that is required
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a relation (or digraph) would force x < x. When the cycle is
// detected while adding input pairs one at a time, pair_index names the
// zero-based pair that closed it.
class CycleError : public Error {
 public:
  explicit CycleError(const std::string& what,
                      std::optional<std::size_t> pair_index = std::nullopt,
                      std::optional<std::size_t> line = std::nullopt)
      : Error(ErrorKind::kValidation, what), pair_index_(pair_index), line_(line) {}
  std::optional<std::size_t> pair_index() const { return pair_index_; }
  // Input line of the offending pair, when parsed from a file.
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> pair_index_;
  std::optional<std::size_t> line_;
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class PermutationError : public Error {
 public:
  explicit PermutationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class NotExtensionError : public Error {
 public:
  explicit NotExtensionError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class NotDownsetError : public Error {
 public:
  explicit NotDownsetError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorKind::kValidation,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyInstanceError : public Error {
 public:
  explicit EmptyInstanceError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& what)
      : Error(ErrorKind::kInfeasible, what) {}
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::size_t seen)
      : Error(ErrorKind::kInfeasible, what), seen_(seen) {}
  // Number of downsets (or paths) materialized before giving up.
  std::size_t seen() const { return seen_; }

 private:
  std::size_t seen_;
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorKind::kInfeasible, what) {}
};

class NotNFreeError : public Error {
 public:
  explicit NotNFreeError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

}  // namespace nfree
