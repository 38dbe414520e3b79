#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnn {

// Base for everything this library throws on contract violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size/bound precondition was exceeded (powerset width, enumeration caps, ...).
struct SizeExceeded : Error {
  using Error::Error;
};

// Textual input was rejected; `offset` is a 0-based character position.
struct ParseError : Error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : Error(std::move(msg)), offset(off) {}
};

// Token stream contains a symbol the signature does not know.
struct UnknownToken : ParseError {
  std::size_t token_index;
  UnknownToken(std::string msg, std::size_t off, std::size_t tok)
      : ParseError(std::move(msg), off), token_index(tok) {}
};

// Prefix-notation input ended before every operator got its arguments.
struct ArityUnderflow : ParseError {
  using ParseError::ParseError;
};

// A complete term was read but input tokens remain.
struct TrailingTokens : ParseError {
  using ParseError::ParseError;
};

// An operation was applied to the wrong number of arguments.
struct ArityMismatch : Error {
  using Error::Error;
};

struct NotAnOrdinal : Error {
  using Error::Error;
};

struct NotATuple : Error {
  using Error::Error;
};

// A window-bounded fixed-point computation cannot be completed reliably:
// some in-window value is reachable only through points beyond the window.
struct WindowUnstable : Error {
  using Error::Error;
};

// Machine-integer arithmetic would wrap.
struct Overflow : Error {
  using Error::Error;
};

// A structure failed its shape validation (empty carrier, bad indices, ...).
struct InvalidShape : Error {
  using Error::Error;
};

struct UnknownTheorem : Error {
  using Error::Error;
};

}  // namespace vnn
