#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abjad {

/// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An alphabet document or table that violates a LetterValueTable invariant.
class AlphabetError : public Error {
  public:
    AlphabetError(const std::string& what, std::string key)
        : Error(what), key_(std::move(key)) {}

    /// The offending key, or empty when the problem is not tied to one.
    const std::string& key() const noexcept { return key_; }

  private:
    std::string key_;
};

/// A word containing a character that has no value in the active table.
class EncodeError : public Error {
  public:
    EncodeError(const std::string& what, char32_t ch, std::size_t position)
        : Error(what), ch_(ch), position_(position) {}

    char32_t character() const noexcept { return ch_; }
    /// Index of the character within the word, counted in code points.
    std::size_t position() const noexcept { return position_; }

  private:
    char32_t ch_;
    std::size_t position_;
};

/// Input bytes that do not decode under the configured text encoding.
class DecodeError : public Error {
  public:
    DecodeError(const std::string& what, std::size_t byte_offset)
        : Error(what), offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// Raised by sanitize() under the error policy.
class UnencodableToken : public Error {
  public:
    UnencodableToken(const std::string& what, std::string surface, std::size_t position)
        : Error(what), surface_(std::move(surface)), position_(position) {}

    const std::string& surface() const noexcept { return surface_; }
    std::size_t position() const noexcept { return position_; }

  private:
    std::string surface_;
    std::size_t position_;
};

} // namespace abjad
