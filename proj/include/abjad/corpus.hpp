#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abjad/alphabet.hpp"
#include "abjad/error.hpp"
#include "abjad/unicode.hpp"

namespace abjad {

struct Token {
    std::string surface; // UTF-8, as it appeared in the input
    std::size_t position = 0;

    friend bool operator==(const Token&, const Token&) = default;
};

enum class TextEncoding { utf8, latin1, ascii };

inline TextEncoding parse_encoding(std::string_view name) {
    std::string n;
    for (char c : name)
        if (c != '-' && c != '_') n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (n == "utf8") return TextEncoding::utf8;
    if (n == "latin1" || n == "iso88591") return TextEncoding::latin1;
    if (n == "ascii" || n == "usascii") return TextEncoding::ascii;
    throw std::invalid_argument("unknown text encoding '" + std::string(name) + "'");
}

/// Whitespace tokenizer over a byte stream that may arrive in arbitrary chunks.
/// Tokens are identical however the input is split; multi-byte sequences and
/// tokens may straddle chunk boundaries.
class Tokenizer {
  public:
    explicit Tokenizer(TextEncoding encoding = TextEncoding::utf8) : encoding_(encoding) {}

    template <class Sink>
    void feed(std::string_view bytes, Sink&& sink) {
        for (char c : bytes) {
            const auto b = static_cast<unsigned char>(c);
            char32_t cp = 0;
            switch (encoding_) {
            case TextEncoding::utf8:
                if (!utf8_.push(b, cp)) continue;
                break;
            case TextEncoding::ascii:
                if (b >= 0x80)
                    throw DecodeError("non-ASCII byte at byte offset " + std::to_string(offset_), offset_);
                cp = b;
                break;
            case TextEncoding::latin1:
                cp = b;
                break;
            }
            ++offset_;
            if (unicode::is_space(cp)) {
                flush(sink);
            } else {
                unicode::append_utf8(current_, cp);
            }
        }
    }

    /// Ends the stream, emitting any trailing token.
    template <class Sink>
    void finish(Sink&& sink) {
        if (encoding_ == TextEncoding::utf8) utf8_.finish();
        flush(sink);
    }

  private:
    template <class Sink>
    void flush(Sink& sink) {
        if (current_.empty()) return;
        sink(Token{std::move(current_), next_position_++});
        current_.clear();
    }

    TextEncoding encoding_;
    unicode::Utf8Decoder utf8_;
    std::size_t offset_ = 0; // only tracked for single-byte encodings
    std::string current_;
    std::size_t next_position_ = 0;
};

inline std::vector<Token> tokenize(std::string_view text, TextEncoding encoding = TextEncoding::utf8) {
    std::vector<Token> out;
    Tokenizer tok(encoding);
    auto sink = [&](Token&& t) { out.push_back(std::move(t)); };
    tok.feed(text, sink);
    tok.finish(sink);
    return out;
}

inline std::vector<Token> tokenize(std::istream& in, TextEncoding encoding = TextEncoding::utf8,
                                   std::size_t chunk_size = 1 << 16) {
    if (chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
    std::vector<Token> out;
    Tokenizer tok(encoding);
    auto sink = [&](Token&& t) { out.push_back(std::move(t)); };
    std::string buf(chunk_size, '\0');
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        tok.feed(std::string_view(buf.data(), static_cast<std::size_t>(in.gcount())), sink);
    }
    if (in.bad()) throw std::runtime_error("read error");
    tok.finish(sink);
    return out;
}

enum class SanitizePolicy { skip, error };

inline SanitizePolicy parse_policy(std::string_view name) {
    if (name == "skip") return SanitizePolicy::skip;
    if (name == "error") return SanitizePolicy::error;
    throw std::invalid_argument("unknown sanitize policy '" + std::string(name) + "'");
}

/// Tally of tokens dropped under the skip policy.
struct SkipLog {
    static constexpr std::size_t max_samples = 8;

    std::size_t count = 0;
    std::vector<Token> samples; // first few skipped tokens, in stream order

    void record(const Token& t) {
        ++count;
        if (samples.size() < max_samples) samples.push_back(t);
    }

    void merge(const SkipLog& other) {
        count += other.count;
        for (const auto& t : other.samples)
            if (samples.size() < max_samples) samples.push_back(t);
    }
};

/// Trims leading and trailing characters the table cannot encode. Returns the
/// trimmed word when it is non-empty and fully encodable. Interior
/// unencodable characters ("co-op") make the whole token unencodable.
inline std::optional<std::string> sanitize(const Token& token, const LetterValueTable& table,
                                           SanitizePolicy policy, SkipLog* log = nullptr) {
    const std::u32string cps = unicode::decode_utf8(token.surface);
    std::size_t first = 0, last = cps.size();
    while (first < last && !table.contains(cps[first])) ++first;
    while (last > first && !table.contains(cps[last - 1])) --last;

    bool ok = first < last;
    for (std::size_t i = first; ok && i < last; ++i) ok = table.contains(cps[i]);
    if (ok) return unicode::to_utf8(std::u32string_view(cps).substr(first, last - first));

    if (policy == SanitizePolicy::error)
        throw UnencodableToken("unencodable token \"" + token.surface + "\" at position " +
                                   std::to_string(token.position),
                               token.surface, token.position);
    if (log) log->record(token);
    return std::nullopt;
}

} // namespace abjad
