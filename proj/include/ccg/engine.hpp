#pragma once

#include <string>
#include <vector>

#include "ccg/adjudicator.hpp"
#include "ccg/derivation.hpp"
#include "ccg/interpreter.hpp"
#include "ccg/lexicon.hpp"
#include "ccg/state.hpp"

namespace ccg {

ParserState init_state();

// Reachable states from a freshly extended state: as is, method 1 on the
// rightmost pair, revealing into the left neighbour's normal form, and eop
// positing, applied recursively. With `final` set the top-level sentence may
// be closed too.
std::vector<ParserState> reduce_closure(const ParserState& s, bool final = false);

// Categories X/(Z/..) and Z/.. agree on Z.
bool uh_match(const CatPtr& x, const CatPtr& y);

// The buffer admissibility condition, checked on every adjacent pair.
bool buffer_admissible(const Buffer& b);

// Admissible versions of a state. When the rightmost pair is combinable only by
// an anticipated backward rule, one state is returned per anticipation, with
// that rule's unifier applied and any h_shifted term it would introduce.
std::vector<ParserState> admissible_variants(const ParserState& s);

// Collapses states equal up to consistent variable renaming; keeps first seen.
std::vector<ParserState> dedupe(const std::vector<ParserState>& states);

bool is_complete(const ParserState& s);

struct StepResult {
    std::vector<ParserState> candidates;  // after admissibility, interpretation and dedupe
    std::vector<bool> kept;               // parallel to candidates
    std::vector<ParserState> survivors;
    int now = 0;
};

class Engine {
public:
    Engine(const Lexicon& lexicon, Interpreter interpreter, PenaltyConfig config);

    std::vector<ParserState> start() const { return {init_state()}; }

    // Throws LexicalGap for unknown words.
    StepResult advance(const std::vector<ParserState>& states, const std::string& word) const;

    // Closes the sentence; survivors are the complete states with minimal score.
    StepResult finish(const std::vector<ParserState>& states) const;

    const PenaltyConfig& config() const { return config_; }

private:
    StepResult settle(std::vector<ParserState> candidates, int now) const;

    const Lexicon& lexicon_;
    Interpreter interpreter_;
    PenaltyConfig config_;
};

}  // namespace ccg
