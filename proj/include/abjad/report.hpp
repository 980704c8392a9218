#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "abjad/numerics.hpp"
#include "abjad/rational.hpp"
#include "abjad/scan.hpp"

namespace abjad {

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

/// `['x', 'y'] is related to <word> per = <percent>%`
inline std::string format_text_line(const std::pair<std::string, std::string>& seed_words,
                                    const RelationRecord& record) {
    return "['" + seed_words.first + "', '" + seed_words.second + "'] is related to " + record.word +
           " per = " + std::to_string(record.percent) + "%";
}

/// "118/90 ≈ 1.311111"
inline std::string format_relation(const RelationValue& rel) {
    return to_string(rel.value()) + " ≈ " + to_fixed(rel.value(), 6);
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline void write_text(std::ostream& os, const SeedPair& seed, std::span<const RelationRecord> records) {
    const std::pair<std::string, std::string> words{seed.word_x, seed.word_y};
    for (const auto& r : records) os << format_text_line(words, r) << '\n';
}

inline void write_csv(std::ostream& os, std::span<const RelationRecord> records) {
    os << "word,percent,position\n";
    for (const auto& r : records) os << csv_field(r.word) << ',' << r.percent << ',' << r.position << "\n";
}

inline nlohmann::ordered_json to_json(const SeedPair& seed, std::span<const RelationRecord> records) {
    nlohmann::ordered_json doc;
    doc["seed_pair"] = {seed.word_x, seed.word_y};
    doc["seed"] = {{"fraction", to_string(seed.seed.value())},
                   {"dot_sum", seed.seed.dot_sum},
                   {"padded_len", seed.seed.padded_len}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records)
        arr.push_back({{"word", r.word}, {"percent", r.percent}, {"position", r.position}});
    doc["records"] = std::move(arr);
    return doc;
}

inline void write_json(std::ostream& os, const SeedPair& seed, std::span<const RelationRecord> records) {
    os << to_json(seed, records).dump(2) << '\n';
}

inline void write_report(std::ostream& os, OutputFormat format, const SeedPair& seed,
                         std::span<const RelationRecord> records) {
    switch (format) {
    case OutputFormat::text: write_text(os, seed, records); break;
    case OutputFormat::json: write_json(os, seed, records); break;
    case OutputFormat::csv: write_csv(os, records); break;
    }
}

} // namespace abjad
