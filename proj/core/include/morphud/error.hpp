#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphud {

/// Base class of every error the library throws for bad data or config.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed CoNLL-U input. `line()` is 1-based; 0 when not line-specific.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class TagMapError : public Error {
 public:
  using Error::Error;
};

/// A sentence could not be converted. Carries the sentence reference
/// (sent_id or ordinal) and the 1-based token id when known.
class ConversionError : public Error {
 public:
  ConversionError(std::string sentence, int token, const std::string& message)
      : Error(describe(sentence, token, message)),
        sentence_(std::move(sentence)),
        token_(token),
        message_(message) {}

  const std::string& sentence() const noexcept { return sentence_; }
  int token() const noexcept { return token_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string describe(const std::string& sentence, int token,
                              const std::string& message) {
    std::string out;
    if (!sentence.empty()) out += "sentence " + sentence + ": ";
    if (token > 0) out += "token " + std::to_string(token) + ": ";
    return out + message;
  }

  std::string sentence_;
  int token_;
  std::string message_;
};

/// Word and morpheme sentences cannot be paired.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Gold and system files do not share a tokenization.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace morphud
