#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace headliner {

// Raised by the file loaders. `line` is 1-based; 0 when the error is not
// tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ASCII case folding; bytes >= 0x80 are passed through unchanged.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Case-fold, trim, and collapse internal whitespace runs to one space.
// This is the key form used by the keyword database and all lookups.
std::string normalize_key(std::string_view s);

// True when every character is punctuation (ASCII or the common UTF-8
// quotes/dashes). Such tokens are not words.
bool is_punctuation_token(std::string_view token);

// First byte is an ASCII capital letter.
bool is_capitalized(std::string_view token);

// 2-5 characters, all ASCII capital letters.
bool is_acronym(std::string_view token);

std::string read_file(const std::string& path);

}  // namespace headliner
