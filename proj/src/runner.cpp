#include "ccg/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ccg {

namespace {

using nlohmann::json;

json state_record(const ParserState& s, int now, const PenaltyConfig& cfg, bool kept, bool final)
{
    Namer n;
    json buffer = json::array();
    for (std::size_t i = 0; i < s.buffer.size(); ++i)
        buffer.push_back(display_category(s.buffer[i]->cat, n, final || i > 0));
    const TermList terms = s.terms();
    json all = json::array();
    json fresh = json::array();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto t = to_string(terms[i], n);
        all.push_back(t);
        if (i >= s.prior_terms)
            fresh.push_back(t);
    }
    json annotations = json::array();
    for (const auto& a : s.annotations)
        annotations.push_back(to_string(a, n));
    json penalties = json::array();
    for (const auto& p : s.penalties)
        penalties.push_back({{"kind", penalty_name(p.kind)},
                             {"index", n.value(p.index)},
                             {"detected_at", p.detected_at},
                             {"matured", matured(p, now, cfg)}});
    return {{"buffer", buffer},
            {"terms", all},
            {"new_terms", fresh},
            {"annotations", annotations},
            {"penalties", penalties},
            {"score", state_score(s, now, cfg)},
            {"disconnectedness", disconnectedness(terms)},
            {"kept", kept}};
}

std::string event(const std::string& word, int clock, const StepResult& r, const PenaltyConfig& cfg, bool final)
{
    json states = json::array();
    for (std::size_t i = 0; i < r.candidates.size(); ++i)
        states.push_back(state_record(r.candidates[i], r.now, cfg, r.kept[i], final));
    json e = {{"word", word}, {"word_clock", clock}, {"states", states}};
    return e.dump();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string_view verdict_name(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::Ok:
        return "ok";
    case Verdict::Kind::GardenPath:
        return "gp";
    case Verdict::Kind::Awkward:
        return "awkward";
    case Verdict::Kind::Error:
        return "error";
    }
    return "?";
}

int exit_code(const Verdict& v)
{
    switch (v.kind) {
    case Verdict::Kind::Ok:
        return 0;
    case Verdict::Kind::GardenPath:
        return 2;
    case Verdict::Kind::Awkward:
        return 3;
    case Verdict::Kind::Error:
        return 1;
    }
    return 1;
}

std::vector<std::string> tokenize(const std::string& sentence)
{
    std::vector<std::string> out;
    std::istringstream ss(sentence);
    for (std::string w; ss >> w;) {
        while (!w.empty() && (w.back() == '.' || w.back() == ',' || w.back() == '?' || w.back() == '!'))
            w.pop_back();
        if (!w.empty())
            out.push_back(w);
    }
    return out;
}

std::string display_category(const CatPtr& c, Namer& n, bool show_wrapper)
{
    if (show_wrapper)
        return n.category(c);
    std::vector<std::pair<Slash, CatPtr>> args;
    CatPtr core = c;
    while (core->is_functor()) {
        args.emplace_back(core->slash, core->arg);
        core = core->result;
    }
    if (!core->is_basic() || core->head != Head::tls || args.empty())
        return n.category(c);
    const CatPtr& inner = args.back().second;
    if (!inner->is_basic() || inner->head != Head::eop)
        return n.category(c);
    args.pop_back();
    return n.category(rebuild(make_basic(Head::s, core->features, core->index), args));
}

RunResult run_sentence(const std::vector<std::string>& words, const Engine& engine)
{
    RunResult out;
    auto states = engine.start();
    const PenaltyConfig& cfg = engine.config();
    for (std::size_t i = 0; i < words.size(); ++i) {
        StepResult r;
        try {
            r = engine.advance(states, words[i]);
        } catch (const LexicalGap& e) {
            out.verdict.kind = Verdict::Kind::Error;
            out.verdict.index = static_cast<int>(i + 1);
            out.verdict.word = words[i];
            out.verdict.message = e.what();
            return out;
        }
        out.trace.push_back(event(words[i], static_cast<int>(i + 1), r, cfg, false));
        out.live_counts.push_back(r.survivors.size());
        if (r.survivors.empty()) {
            out.verdict.kind = Verdict::Kind::GardenPath;
            out.verdict.index = static_cast<int>(i + 1);
            out.verdict.word = words[i];
            return out;
        }
        states = std::move(r.survivors);
    }
    StepResult r = engine.finish(states);
    out.trace.push_back(event("<end>", static_cast<int>(words.size()), r, cfg, true));
    if (r.survivors.empty()) {
        out.verdict.kind = Verdict::Kind::GardenPath;
        out.verdict.index = static_cast<int>(words.size() + 1);
        out.verdict.word = "<end>";
        return out;
    }
    bool awkward = true;
    for (const auto& s : r.survivors)
        awkward = awkward && has_awkward_penalty(s, r.now, cfg);
    out.verdict.kind = awkward ? Verdict::Kind::Awkward : Verdict::Kind::Ok;
    out.verdict.finals = std::move(r.survivors);
    return out;
}

bool ScenarioReport::all_passed() const
{
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return !results.empty();
}

ScenarioReport run_scenarios(const std::string& dir)
{
    namespace fs = std::filesystem;
    const fs::path root(dir);
    const fs::path manifest_path = root / "manifest.json";
    json m;
    try {
        m = json::parse(read_file(manifest_path.string()));
    } catch (const json::exception& e) {
        throw ConfigError(manifest_path.string() + ": " + e.what());
    }
    auto path_of = [&](const std::string& key) {
        if (!m.contains(key))
            throw ConfigError(manifest_path.string() + ": missing `" + key + "`");
        fs::path p = root / m.at(key).get<std::string>();
        if (!fs::exists(p))
            throw ConfigError("missing fixture " + p.string());
        return p.string();
    };

    Lexicon lexicon;
    lexicon.load_words(path_of("lexicon"));
    lexicon.load_closed(path_of("closed_class"));
    PlausibilityDB plaus = PlausibilityDB::load(path_of("plausibility"));
    PenaltyConfig cfg = m.contains("config") ? PenaltyConfig::load(path_of("config")) : PenaltyConfig::defaults();

    std::map<std::string, DiscourseDB> contexts;
    for (const auto& [name, rel] : m.at("contexts").items()) {
        fs::path p = root / rel.get<std::string>();
        if (!fs::exists(p))
            throw ConfigError("missing fixture " + p.string());
        contexts.emplace(name, DiscourseDB::load(p.string()));
    }

    ScenarioReport report;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& sc : m.at("scenarios")) {
        ScenarioResult r;
        r.id = sc.at("id").is_string() ? sc.at("id").get<std::string>() : std::to_string(sc.at("id").get<int>());
        r.sentence = sc.at("sentence").get<std::string>();
        r.context = sc.value("context", std::string("empty"));
        r.expected = sc.at("expect").get<std::string>();
        r.expected_gp_index = sc.value("gp_index", 0);
        auto ctx = contexts.find(r.context);
        if (ctx == contexts.end())
            throw ConfigError("scenario " + r.id + ": unknown context `" + r.context + "`");
        Engine engine(lexicon, Interpreter{&ctx->second, &plaus, lexicon.clausal_predicates()}, cfg);
        RunResult run = run_sentence(tokenize(r.sentence), engine);
        r.actual = std::string(verdict_name(run.verdict.kind));
        r.gp_index = run.verdict.index;
        r.gp_word = run.verdict.word;
        r.pass = r.actual == r.expected;
        if (r.pass && r.expected == "gp" && r.expected_gp_index != 0)
            r.pass = r.gp_index == r.expected_gp_index;
        report.results.push_back(std::move(r));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ccg
