#pragma once

#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>

#include <unicode/uchar.h>

#include "abjad/error.hpp"

namespace abjad::unicode {

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string to_utf8(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) append_utf8(out, cp);
    return out;
}

inline std::string to_utf8(char32_t cp) {
    std::string out;
    append_utf8(out, cp);
    return out;
}

/// Incremental UTF-8 decoder. Bytes may arrive split at any boundary;
/// malformed input raises DecodeError carrying the offset of the bad sequence.
class Utf8Decoder {
  public:
    /// Consumes one byte. Returns true and sets `cp` when a code point completes.
    bool push(unsigned char b, char32_t& cp) {
        const std::size_t offset = offset_++;
        if (need_ == 0) {
            start_ = offset;
            if (b < 0x80) {
                cp = b;
                return true;
            }
            if (b >= 0xC2 && b <= 0xDF) {
                need_ = 1;
                acc_ = b & 0x1F;
            } else if (b >= 0xE0 && b <= 0xEF) {
                need_ = 2;
                acc_ = b & 0x0F;
            } else if (b >= 0xF0 && b <= 0xF4) {
                need_ = 3;
                acc_ = b & 0x07;
            } else {
                fail(offset);
            }
            lo_ = 0x80;
            hi_ = 0xBF;
            if (b == 0xE0) lo_ = 0xA0;
            if (b == 0xED) hi_ = 0x9F;
            if (b == 0xF0) lo_ = 0x90;
            if (b == 0xF4) hi_ = 0x8F;
            return false;
        }
        if (b < lo_ || b > hi_) fail(start_);
        lo_ = 0x80;
        hi_ = 0xBF;
        acc_ = (acc_ << 6) | (b & 0x3F);
        if (--need_ == 0) {
            cp = acc_;
            return true;
        }
        return false;
    }

    /// Throws if the stream ended inside a multi-byte sequence.
    void finish() const {
        if (need_ != 0)
            throw DecodeError("truncated UTF-8 sequence at byte offset " + std::to_string(start_),
                              start_);
    }

    std::size_t offset() const noexcept { return offset_; }

  private:
    [[noreturn]] static void fail(std::size_t at) {
        throw DecodeError("invalid UTF-8 at byte offset " + std::to_string(at), at);
    }

    std::size_t offset_ = 0;
    std::size_t start_ = 0;
    int need_ = 0;
    char32_t acc_ = 0;
    unsigned char lo_ = 0x80;
    unsigned char hi_ = 0xBF;
};

inline std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    Utf8Decoder dec;
    char32_t cp = 0;
    for (char c : bytes)
        if (dec.push(static_cast<unsigned char>(c), cp)) out.push_back(cp);
    dec.finish();
    return out;
}

/// Simple (single code point) Unicode lowercase mapping.
inline char32_t fold(char32_t cp) {
    return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

/// Whitespace as understood by Python's str.split(): the Unicode White_Space
/// property plus the ASCII information separators U+001C..U+001F.
inline bool is_space(char32_t cp) {
    if (cp >= 0x1C && cp <= 0x1F) return true;
    return u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_WHITE_SPACE);
}

/// Printable form of a code point for diagnostics.
inline std::string describe(char32_t cp) {
    if (cp < 0x20 || cp == 0x7F) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
        return buf;
    }
    return "'" + to_utf8(cp) + "'";
}

} // namespace abjad::unicode
