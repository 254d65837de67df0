#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berge {

/// Malformed graph6 / DIMACS input. `offset` is the byte (or line, for
/// DIMACS) where decoding failed.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { BadHeader, BadByte, Truncated, TrailingBits, TooManyVertices, BadLine };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// An exhaustive search refused to run (or stopped) because its configured
/// size or step limit was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is only defined for Berge graphs. Carries the odd hole
/// (of g, or of its complement when `in_complement`) if one was found.
class NotBerge : public std::invalid_argument {
 public:
  explicit NotBerge(const std::string& what, std::vector<int> hole = {}, bool in_complement = false)
      : std::invalid_argument(what), hole_(std::move(hole)), in_complement_(in_complement) {}

  const std::vector<int>& hole() const { return hole_; }
  bool in_complement() const { return in_complement_; }

 private:
  std::vector<int> hole_;
  bool in_complement_;
};

}  // namespace berge
