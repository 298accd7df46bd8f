#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "ccg/state.hpp"

namespace ccg {

struct PenaltyConfig {
    std::string preset = "default";
    std::array<int, kPenaltyKinds> strength{2, 1, 1, 1, 1, 3, 1};
    std::array<int, kPenaltyKinds> grace{0, 0, 0, 2, 0, 0, 0};
    // Matured penalties of these kinds make a surviving analysis awkward.
    std::set<PenaltyKind> awkward_kinds{PenaltyKind::implausibility, PenaltyKind::heavy_arg_light_modifier};
    // Strength per unit of disconnectedness; 0 keeps it out of the score.
    int disconnectedness_penalty = 0;
    bool discarding = true;

    int strength_of(PenaltyKind k) const { return strength[static_cast<std::size_t>(k)]; }
    int grace_of(PenaltyKind k) const { return grace[static_cast<std::size_t>(k)]; }

    static PenaltyConfig defaults();
    // The earlier strength table: implausibility 1, heavy_arg_light_modifier 2.
    static PenaltyConfig early();
    static PenaltyConfig preset_named(const std::string& name);

    // JSON: {"preset": "...", "strength": {kind: n}, "grace": {kind: n},
    //        "awkward_kinds": [...], "disconnectedness_penalty": n, "discarding": bool}
    static PenaltyConfig parse_json(const std::string& text);
    static PenaltyConfig load(const std::string& path);
};

bool matured(const TimedPenalty& p, int now, const PenaltyConfig& cfg);

int state_score(const ParserState& s, int now, const PenaltyConfig& cfg);

// Keeps exactly the states with the minimum score.
std::vector<ParserState> discard(std::vector<ParserState> states, int now, const PenaltyConfig& cfg);

// True iff the state carries a matured penalty of an awkward kind.
bool has_awkward_penalty(const ParserState& s, int now, const PenaltyConfig& cfg);

}  // namespace ccg
