#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abjad/alphabet.hpp"
#include "abjad/error.hpp"
#include "abjad/rational.hpp"
#include "abjad/unicode.hpp"

namespace abjad {

using u128 = unsigned __int128;

/// Decimal digits (each 0..9) of a word's letter values, concatenated in order.
struct DigitSeries {
    std::vector<std::uint8_t> digits;

    std::size_t size() const noexcept { return digits.size(); }
    bool empty() const noexcept { return digits.empty(); }
    auto begin() const noexcept { return digits.begin(); }
    auto end() const noexcept { return digits.end(); }

    friend bool operator==(const DigitSeries&, const DigitSeries&) = default;
};

/// Relation between two words, kept as the integer pair behind
/// dot_sum / (10 * padded_len).
struct RelationValue {
    std::uint64_t dot_sum = 0;
    std::uint64_t padded_len = 1;

    /// The denoted value dot_sum / (10 n), unreduced.
    Ratio<std::uint64_t> value() const { return {dot_sum, 10 * padded_len}; }

    friend bool operator==(const RelationValue&, const RelationValue&) = default;
};

struct SeedPair {
    std::string word_x;
    std::string word_y;
    RelationValue seed;
};

namespace detail {

inline void append_digits(std::vector<std::uint8_t>& out, LetterValue v) {
    const std::size_t mark = out.size();
    do {
        out.push_back(static_cast<std::uint8_t>(v % 10));
        v /= 10;
    } while (v != 0);
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
}

} // namespace detail

inline DigitSeries encode(const LetterValueTable& table, std::u32string_view word) {
    if (word.empty()) throw EncodeError("cannot encode an empty word", 0, 0);
    DigitSeries out;
    out.digits.reserve(word.size() * 3);
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto v = table.value_of(word[i]);
        if (!v)
            throw EncodeError("unencodable character " + unicode::describe(word[i]) +
                                  " at position " + std::to_string(i) + " in \"" +
                                  unicode::to_utf8(word) + "\"",
                              word[i], i);
        detail::append_digits(out.digits, *v);
    }
    return out;
}

/// Encodes a UTF-8 word: each letter's value contributes its decimal digits,
/// so 't' (200) becomes [2, 0, 0]. Letters are case-folded before lookup.
inline DigitSeries encode(const LetterValueTable& table, std::string_view word) {
    return encode(table, unicode::decode_utf8(word));
}

/// Extends the shorter series with trailing zeros to the longer one's length.
inline std::pair<DigitSeries, DigitSeries> pad_to_common_length(const DigitSeries& a,
                                                                const DigitSeries& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("cannot pad an empty digit series");
    const std::size_t n = std::max(a.size(), b.size());
    std::pair<DigitSeries, DigitSeries> out{a, b};
    out.first.digits.resize(n, 0);
    out.second.digits.resize(n, 0);
    return out;
}

/// Elementwise product sum after zero padding, with the common length.
inline RelationValue relate_series(const DigitSeries& a, const DigitSeries& b) {
    const auto [pa, pb] = pad_to_common_length(a, b);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (__builtin_add_overflow(sum, std::uint64_t{pa.digits[i]} * pb.digits[i], &sum))
            throw std::overflow_error("dot sum exceeds 64 bits");
    }
    return {sum, pa.size()};
}

inline RelationValue relation(const LetterValueTable& table, std::string_view x, std::string_view y) {
    return relate_series(encode(table, x), encode(table, y));
}

inline SeedPair seed_of(const LetterValueTable& table, std::string_view x, std::string_view y) {
    return {std::string(x), std::string(y), relation(table, x, y)};
}

/// seed * rel * 100 as an exact fraction: the two factors of ten in the
/// relation denominators cancel the hundred, leaving
/// (seed.dot * rel.dot) / (seed.n * rel.n).
inline Ratio<u128> exact_score(const SeedPair& seed, const RelationValue& rel) {
    return {u128{seed.seed.dot_sum} * rel.dot_sum, u128{seed.seed.padded_len} * rel.padded_len};
}

/// Integer relevance percentage, rounded half away from zero.
inline std::uint64_t score(const SeedPair& seed, const RelationValue& rel) {
    const u128 r = exact_score(seed, rel).round_half_away();
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("score exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

inline bool has_relation(const SeedPair& seed, const RelationValue& rel) {
    return seed.seed.dot_sum > 0 && rel.dot_sum > 0;
}

} // namespace abjad
