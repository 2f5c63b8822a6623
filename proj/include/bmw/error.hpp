#pragma once

#include <stdexcept>
#include <string>

namespace bmw {

// Malformed input text or file content.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was asked to act outside its contract (mixed degrees,
// out-of-range positions, non-matching rewrite patterns, ...).
class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A movie, chart or script failed validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bmw
