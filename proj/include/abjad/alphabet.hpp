#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abjad/error.hpp"
#include "abjad/unicode.hpp"

namespace abjad {

using LetterValue = std::uint64_t;

/// Immutable mapping from case-folded letters to positive Abjad values.
///
/// Construction validates every invariant: the table is non-empty, each value
/// is at least 1, and no two letters collide after case folding. Lookups fold
/// their argument, so 'B' and 'b' resolve to the same entry.
class LetterValueTable {
  public:
    using Entries = std::map<char32_t, LetterValue>;

    LetterValueTable(std::string name, const std::vector<std::pair<char32_t, LetterValue>>& entries)
        : name_(std::move(name)) {
        for (const auto& [ch, value] : entries) {
            const std::string key = unicode::to_utf8(ch);
            if (value < 1) throw AlphabetError("non-positive value for key '" + key + "'", key);
            if (!entries_.emplace(unicode::fold(ch), value).second)
                throw AlphabetError("duplicate letter after case fold: '" + key + "'", key);
        }
        if (entries_.empty()) throw AlphabetError("empty table", {});
    }

    const std::string& name() const noexcept { return name_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::optional<LetterValue> value_of(char32_t ch) const {
        auto it = entries_.find(unicode::fold(ch));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(char32_t ch) const { return entries_.count(unicode::fold(ch)) != 0; }

    friend bool operator==(const LetterValueTable&, const LetterValueTable&) = default;

  private:
    std::string name_;
    Entries entries_;
};

/// The 26-letter English table: a..i = 1..9, j..r = 10..90, s..z = 100..800.
inline LetterValueTable builtin_english() {
    static const LetterValue values[26] = {1,  2,  3,  4,  5,  6,   7,   8,   9,
                                           10, 20, 30, 40, 50, 60,  70,  80,  90,
                                           100, 200, 300, 400, 500, 600, 700, 800};
    std::vector<std::pair<char32_t, LetterValue>> entries;
    entries.reserve(26);
    for (int i = 0; i < 26; ++i) entries.emplace_back(U'a' + i, values[i]);
    return LetterValueTable("english", entries);
}

inline std::optional<LetterValue> letter_value(const LetterValueTable& table, char32_t ch) {
    return table.value_of(ch);
}

/// Parses an alphabet document: {"name": "...", "values": {"a": 1, ...}}.
///
/// Keys are compared exactly as written, before nlohmann collapses repeated
/// object keys, so {"a":1,"a":2} is reported as a duplicate too.
inline LetterValueTable load_alphabet(std::string_view document) {
    using nlohmann::json;

    std::vector<std::string> raw_keys;
    std::string top_key;
    json::parser_callback_t track = [&](int depth, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::key) {
            if (depth == 1) top_key = parsed.get<std::string>();
            else if (depth == 2 && top_key == "values") raw_keys.push_back(parsed.get<std::string>());
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(document.begin(), document.end(), track);
    } catch (const json::parse_error& e) {
        throw AlphabetError(std::string("malformed document: ") + e.what(), {});
    }
    if (!doc.is_object()) throw AlphabetError("malformed document: expected an object", {});

    auto name = doc.find("name");
    if (name == doc.end() || !name->is_string())
        throw AlphabetError("malformed document: missing string field 'name'", "name");
    auto values = doc.find("values");
    if (values == doc.end() || !values->is_object())
        throw AlphabetError("malformed document: missing object field 'values'", "values");

    for (std::size_t i = 0; i < raw_keys.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (raw_keys[i] == raw_keys[j])
                throw AlphabetError("duplicate letter: '" + raw_keys[i] + "'",
                                    raw_keys[i]);

    std::vector<std::pair<char32_t, LetterValue>> entries;
    for (const auto& key : raw_keys) {
        const json& v = (*values)[key];
        std::u32string letter;
        try {
            letter = unicode::decode_utf8(key);
        } catch (const DecodeError&) {
            throw AlphabetError("malformed document: key is not valid UTF-8", key);
        }
        if (letter.size() != 1)
            throw AlphabetError("key '" + key + "' is not a single character", key);
        if (v.is_number_unsigned()) {
            entries.emplace_back(letter[0], v.get<LetterValue>());
        } else if (v.is_number_integer()) {
            // signed integers only reach here when negative
            throw AlphabetError("non-positive value for key '" + key + "'", key);
        } else {
            throw AlphabetError("value for key '" + key + "' is not a positive integer", key);
        }
    }
    return LetterValueTable(name->get<std::string>(), entries);
}

inline LetterValueTable load_alphabet_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AlphabetError("cannot open alphabet file " + path.string(), path.string());
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load_alphabet(text);
}

/// Renders the table in the document form accepted by load_alphabet.
inline std::string serialize_alphabet(const LetterValueTable& table) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [ch, value] : table.entries()) values[unicode::to_utf8(ch)] = value;
    nlohmann::ordered_json doc;
    doc["name"] = table.name();
    doc["values"] = std::move(values);
    return doc.dump();
}

} // namespace abjad
