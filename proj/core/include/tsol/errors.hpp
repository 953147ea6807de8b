#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsol {

// Base of every error the library throws. `code()` is the stable snake_case
// tag used by the CLI and the JSON API.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class IllegalMove : public Error {
 public:
  // index is the position of the offending move in a replayed sequence, or
  // npos for a standalone apply_move.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  explicit IllegalMove(const std::string& what, std::size_t index = npos)
      : Error("illegal_move", what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class BadSize : public Error {
 public:
  explicit BadSize(const std::string& what) : Error("bad_size", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse_error", "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotAFilling : public Error {
 public:
  explicit NotAFilling(const std::string& what) : Error("not_a_filling", what) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error("too_large", what) {}
};

class BadParams : public Error {
 public:
  explicit BadParams(const std::string& what) : Error("bad_params", what) {}
};

class NotSameOrbit : public Error {
 public:
  NotSameOrbit() : Error("not_same_orbit", "not in the same orbit") {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t partial)
      : Error("cap_exceeded",
              "vertex cap exceeded after " + std::to_string(partial) + " vertices"),
        partial_(partial) {}
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

class NotABasis : public Error {
 public:
  explicit NotABasis(const std::string& what) : Error("not_a_basis", what) {}
};

class NotSameTriangle : public Error {
 public:
  NotSameTriangle() : Error("not_same_triangle", "patterns do not fill the same triangle") {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal_error", what) {}
};

}  // namespace tsol
