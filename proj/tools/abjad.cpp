// abjad: encode words as Abjad digit series, inspect seed relations, and scan
// a corpus for words related to a seed pair.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 encoding/alphabet error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "abjad/abjad.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kEncoding = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

abjad::LetterValueTable select_alphabet(const std::string& spec) {
    if (spec == "english") return abjad::builtin_english();
    return abjad::load_alphabet_file(spec);
}

std::string format_digits(const abjad::DigitSeries& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += static_cast<char>('0' + s.digits[i]);
    }
    return out + "]";
}

std::vector<abjad::Token> read_corpus(const std::string& path, abjad::TextEncoding enc) {
    if (path == "-") return abjad::tokenize(std::cin, enc);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file " + path);
    try {
        return abjad::tokenize(in, enc);
    } catch (const abjad::DecodeError& e) {
        throw abjad::DecodeError(path + ": " + e.what(), e.byte_offset());
    }
}

/// Single-line "Processing word i of n (p%)" status on stderr, redrawn in place.
class ProgressLine {
  public:
    void operator()(const abjad::ProgressEvent& ev) {
        const auto basis = ev.current * 10000 / ev.total;
        if (basis == last_ && ev.current != ev.total) return;
        last_ = basis;
        std::ostringstream msg;
        msg << "Processing word " << ev.current << " of " << ev.total << " (" << std::fixed
            << std::setprecision(2) << ev.percent_done << "%)";
        width_ = std::max(width_, msg.str().size());
        std::cerr << '\r' << msg.str() << std::flush;
    }

    void clear() const {
        if (width_) std::cerr << '\r' << std::string(width_, ' ') << '\r' << std::flush;
    }

  private:
    std::size_t last_ = static_cast<std::size_t>(-1);
    std::size_t width_ = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abjad numeral word relations"};
    app.require_subcommand(1);

    std::string alphabet = "english";
    auto add_alphabet = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", alphabet, "'english' or path to an alphabet JSON file")
            ->capture_default_str();
    };

    std::string word;
    auto* encode_cmd = app.add_subcommand("encode", "Print the digit series of a word");
    encode_cmd->add_option("word", word)->required();
    add_alphabet(encode_cmd);

    std::string word_x, word_y;
    auto* relate_cmd = app.add_subcommand("relate", "Print the relation value of a word pair");
    relate_cmd->add_option("x", word_x)->required();
    relate_cmd->add_option("y", word_y)->required();
    add_alphabet(relate_cmd);

    abjad::ScanConfig cfg;
    std::string corpus, out_path, format = "text", policy = "skip", encoding = "utf-8";
    std::optional<std::size_t> top_k;
    bool show_progress = false;
    auto* scan_cmd = app.add_subcommand("scan", "Score corpus words against a seed pair");
    scan_cmd->add_option("x", cfg.word_x, "first seed word")->required();
    scan_cmd->add_option("y", cfg.word_y, "second seed word")->required();
    scan_cmd->add_option("--corpus", corpus, "corpus file, '-' for standard input")->required();
    scan_cmd->add_option("--out", out_path, "output file (default: standard output)");
    scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    add_alphabet(scan_cmd);
    scan_cmd->add_option("--min-score", cfg.min_percent, "minimum percentage to report")->capture_default_str();
    scan_cmd->add_option("--top-k", top_k, "keep only the k highest scores")->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--dedup", cfg.dedup, "report each case-folded word once");
    scan_cmd->add_option("--policy", policy, "unencodable tokens: skip or error")
        ->check(CLI::IsMember({"skip", "error"}))
        ->capture_default_str();
    scan_cmd->add_option("--encoding", encoding, "corpus text encoding (utf-8, latin-1, ascii)")
        ->check(CLI::IsMember({"utf-8", "utf8", "latin-1", "latin1", "iso-8859-1", "ascii"}))
        ->capture_default_str();
    scan_cmd->add_option("--jobs", cfg.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    scan_cmd->add_flag("--progress", show_progress, "show progress on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const auto table = select_alphabet(alphabet);

        if (*encode_cmd) {
            std::cout << format_digits(abjad::encode(table, word)) << '\n';
            return kOk;
        }

        if (*relate_cmd) {
            std::cout << abjad::format_relation(abjad::relation(table, word_x, word_y)) << '\n';
            return kOk;
        }

        cfg.top_k = top_k;
        cfg.policy = abjad::parse_policy(policy);
        // fail on an unencodable seed before touching the corpus
        abjad::seed_of(table, cfg.word_x, cfg.word_y);
        const auto tokens = read_corpus(corpus, abjad::parse_encoding(encoding));

        ProgressLine line;
        abjad::ProgressSink sink;
        if (show_progress) sink = std::ref(line);
        const auto result = abjad::scan_corpus(table, cfg, tokens, sink);
        if (show_progress) line.clear();

        if (result.skipped.count)
            std::cerr << "warning: skipped " << result.skipped.count << " unencodable token(s), first: \""
                      << result.skipped.samples.front().surface << "\" at position "
                      << result.skipped.samples.front().position << '\n';

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw IoError("cannot open output file " + out_path);
        }
        std::ostream& os = out_path.empty() ? std::cout : file;
        abjad::write_report(os, abjad::parse_format(format), result.seed, result.records);
        os.flush();
        if (!os) throw IoError("write failed");
        return kOk;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const abjad::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kEncoding;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
}
