#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "abjad/alphabet.hpp"
#include "abjad/corpus.hpp"
#include "abjad/numerics.hpp"
#include "abjad/unicode.hpp"

namespace abjad {

/// One scan hit. `word` is the sanitized token, so
/// percent == score(seed, relation(seed.word_x, word)).
struct RelationRecord {
    std::string word;
    std::uint64_t percent = 0;
    std::size_t position = 0;

    friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

struct ScanConfig {
    std::string word_x;
    std::string word_y;
    std::uint64_t min_percent = 1;
    std::optional<std::size_t> top_k;
    bool dedup = false;
    SanitizePolicy policy = SanitizePolicy::skip;
    unsigned workers = 1;
};

struct ProgressEvent {
    std::size_t current = 0; // 1-based
    std::size_t total = 0;
    double percent_done = 0.0;
};

using ProgressSink = std::function<void(const ProgressEvent&)>;

inline void emit_progress(const ProgressSink& sink, std::size_t current, std::size_t total) {
    if (total == 0 || current > total)
        throw std::invalid_argument("progress requires 0 <= current <= total and total >= 1");
    if (!sink) return;
    sink(ProgressEvent{current, total, static_cast<double>(current) / static_cast<double>(total) * 100.0});
}

struct ScanResult {
    SeedPair seed;
    std::vector<RelationRecord> records;
    SkipLog skipped;
};

inline std::string fold_word(std::string_view word) {
    std::u32string cps = unicode::decode_utf8(word);
    for (auto& c : cps) c = unicode::fold(c);
    return unicode::to_utf8(cps);
}

/// Keeps the k highest-percent records (earlier position wins ties), then
/// restores position order.
inline void retain_top_k(std::vector<RelationRecord>& records, std::size_t k) {
    if (records.size() <= k) return;
    std::stable_sort(records.begin(), records.end(),
                     [](const RelationRecord& a, const RelationRecord& b) {
                         if (a.percent != b.percent) return a.percent > b.percent;
                         return a.position < b.position;
                     });
    records.resize(k);
    std::sort(records.begin(), records.end(),
              [](const RelationRecord& a, const RelationRecord& b) { return a.position < b.position; });
}

/// Scores every corpus token against the first seed word.
///
/// The seed relation R(x, y) is computed once. Each sanitized token z is
/// related to x (never y), gated on both dot sums being nonzero and on the
/// score reaching cfg.min_percent. Output is in corpus order regardless of
/// cfg.workers. Dedup keeps the first occurrence of each case-folded word;
/// top_k is applied last.
inline ScanResult scan_corpus(const LetterValueTable& table, const ScanConfig& cfg,
                              std::span<const Token> tokens, const ProgressSink& progress = {}) {
    if (cfg.top_k && *cfg.top_k == 0) throw std::invalid_argument("top_k must be at least 1");

    ScanResult result;
    result.seed = seed_of(table, cfg.word_x, cfg.word_y);
    const DigitSeries anchor = encode(table, cfg.word_x);
    const std::size_t total = tokens.size();

    std::mutex progress_mu;
    std::size_t delivered = 0;
    std::atomic<std::size_t> done{0};
    auto tick = [&] {
        const std::size_t cur = ++done;
        if (!progress) return;
        std::lock_guard lock(progress_mu);
        if (cur > delivered) {
            delivered = cur;
            emit_progress(progress, cur, total);
        }
    };

    struct Block {
        std::vector<RelationRecord> records;
        SkipLog skipped;
        std::exception_ptr error;
    };

    auto run_block = [&](std::span<const Token> slice, Block& out) {
        try {
            for (const Token& t : slice) {
                auto word = sanitize(t, table, cfg.policy, &out.skipped);
                if (word) {
                    const RelationValue rel = relate_series(anchor, encode(table, *word));
                    if (has_relation(result.seed, rel)) {
                        const std::uint64_t pct = score(result.seed, rel);
                        if (pct >= cfg.min_percent) out.records.push_back({std::move(*word), pct, t.position});
                    }
                }
                tick();
            }
        } catch (...) {
            out.error = std::current_exception();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(cfg.workers, 1, std::max<std::size_t>(total, 1));
    std::vector<Block> blocks(workers);
    if (workers == 1) {
        run_block(tokens, blocks[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t per = (total + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(total, w * per), hi = std::min(total, lo + per);
            pool.emplace_back([&, lo, hi, w] { run_block(tokens.subspan(lo, hi - lo), blocks[w]); });
        }
    }

    // blocks are contiguous and ordered, so the first error is the earliest one
    for (auto& b : blocks) {
        if (b.error) std::rethrow_exception(b.error);
        result.skipped.merge(b.skipped);
        for (auto& r : b.records) result.records.push_back(std::move(r));
    }

    if (cfg.dedup) {
        std::unordered_set<std::string> seen;
        std::erase_if(result.records, [&](const RelationRecord& r) { return !seen.insert(fold_word(r.word)).second; });
    }
    if (cfg.top_k) retain_top_k(result.records, *cfg.top_k);
    return result;
}

} // namespace abjad
