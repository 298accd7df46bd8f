#pragma once

#include <string>
#include <vector>

#include "ccg/engine.hpp"

namespace ccg {

struct Verdict {
    enum class Kind { Ok, GardenPath, Awkward, Error };
    Kind kind = Kind::Ok;
    int index = 0;                   // GardenPath: 1-based word position, n+1 for end of input
    std::string word;                // GardenPath: the word, or "<end>"
    std::vector<ParserState> finals; // Ok / Awkward: minimal-score complete states
    std::string message;             // Error
};

std::string_view verdict_name(Verdict::Kind k);
int exit_code(const Verdict& v);

struct RunResult {
    Verdict verdict;
    std::vector<std::string> trace;      // JSON lines, one per word plus one for the end
    std::vector<std::size_t> live_counts; // surviving states after each word
};

// Splits on whitespace and drops sentence punctuation; case is kept.
std::vector<std::string> tokenize(const std::string& sentence);

RunResult run_sentence(const std::vector<std::string>& words, const Engine& engine);

// Display form of a buffer category: the top-level tls(F):E/eop:E wrapper is
// shown as s(F):E unless `show_wrapper` is set.
std::string display_category(const CatPtr& c, Namer& n, bool show_wrapper = false);

struct ScenarioResult {
    std::string id;
    std::string sentence;
    std::string context;
    std::string expected;  // ok | gp | awkward
    std::string actual;
    int gp_index = 0;
    std::string gp_word;
    int expected_gp_index = 0;  // 0 when the manifest does not pin it
    bool pass = false;
};

struct ScenarioReport {
    std::vector<ScenarioResult> results;
    double seconds = 0;
    bool all_passed() const;
};

// Runs DIR/manifest.json. Throws ConfigError for missing or malformed fixtures.
ScenarioReport run_scenarios(const std::string& dir);

}  // namespace ccg
