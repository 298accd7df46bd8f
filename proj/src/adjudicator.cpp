#include "ccg/adjudicator.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "ccg/interpreter.hpp"
#include "ccg/lexicon.hpp"

namespace ccg {

PenaltyConfig PenaltyConfig::defaults() { return PenaltyConfig{}; }

PenaltyConfig PenaltyConfig::early()
{
    PenaltyConfig c;
    c.preset = "early";
    c.strength = {1, 1, 1, 1, 1, 2, 1};
    return c;
}

PenaltyConfig PenaltyConfig::preset_named(const std::string& name)
{
    if (name == "default")
        return defaults();
    if (name == "early")
        return early();
    throw ConfigError("unknown preset `" + name + "`");
}

PenaltyConfig PenaltyConfig::parse_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: expected an object");
    PenaltyConfig c = preset_named(j.value("preset", std::string("default")));
    auto kind = [](const std::string& name) {
        auto k = penalty_from_name(name);
        if (!k)
            throw ConfigError("config: unknown penalty `" + name + "`");
        return static_cast<std::size_t>(*k);
    };
    try {
        if (j.contains("strength"))
            for (const auto& [name, v] : j.at("strength").items())
                c.strength[kind(name)] = v.get<int>();
        if (j.contains("grace"))
            for (const auto& [name, v] : j.at("grace").items())
                c.grace[kind(name)] = v.get<int>();
        if (j.contains("awkward_kinds")) {
            c.awkward_kinds.clear();
            for (const auto& v : j.at("awkward_kinds"))
                c.awkward_kinds.insert(static_cast<PenaltyKind>(kind(v.get<std::string>())));
        }
        c.disconnectedness_penalty = j.value("disconnectedness_penalty", c.disconnectedness_penalty);
        c.discarding = j.value("discarding", c.discarding);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    for (std::size_t i = 0; i < kPenaltyKinds; ++i)
        if (c.strength[i] < 0 || c.grace[i] < 0)
            throw ConfigError("config: strengths and graces must be non-negative");
    return c;
}

PenaltyConfig PenaltyConfig::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

bool matured(const TimedPenalty& p, int now, const PenaltyConfig& cfg)
{
    return now >= p.detected_at + cfg.grace_of(p.kind);
}

int state_score(const ParserState& s, int now, const PenaltyConfig& cfg)
{
    int total = 0;
    for (const auto& p : s.penalties)
        if (matured(p, now, cfg))
            total += cfg.strength_of(p.kind);
    if (cfg.disconnectedness_penalty != 0)
        total += cfg.disconnectedness_penalty * static_cast<int>(disconnectedness(s.terms()));
    return total;
}

std::vector<ParserState> discard(std::vector<ParserState> states, int now, const PenaltyConfig& cfg)
{
    if (states.empty() || !cfg.discarding)
        return states;
    std::vector<int> scores;
    scores.reserve(states.size());
    for (const auto& s : states)
        scores.push_back(state_score(s, now, cfg));
    const int best = *std::min_element(scores.begin(), scores.end());
    std::vector<ParserState> out;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (scores[i] == best)
            out.push_back(std::move(states[i]));
    return out;
}

bool has_awkward_penalty(const ParserState& s, int now, const PenaltyConfig& cfg)
{
    for (const auto& p : s.penalties)
        if (cfg.awkward_kinds.count(p.kind) && matured(p, now, cfg))
            return true;
    return false;
}

}  // namespace ccg
