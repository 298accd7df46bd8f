#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ccg/runner.hpp"

namespace {

int parse_command(const std::string& lexicon, const std::string& closed, const std::string& discourse,
                  const std::string& plausibility, const std::string& config, const std::string& trace,
                  const std::string& sentence)
{
    using namespace ccg;
    Lexicon lex;
    lex.load_words(lexicon);
    if (!closed.empty())
        lex.load_closed(closed);
    DiscourseDB db = discourse.empty() ? DiscourseDB{} : DiscourseDB::load(discourse);
    PlausibilityDB plaus = plausibility.empty() ? PlausibilityDB{} : PlausibilityDB::load(plausibility);
    PenaltyConfig cfg = config.empty() ? PenaltyConfig::defaults() : PenaltyConfig::load(config);

    Engine engine(lex, Interpreter{&db, &plaus, lex.clausal_predicates()}, cfg);
    RunResult r = run_sentence(tokenize(sentence), engine);

    if (!trace.empty()) {
        std::ofstream out(trace);
        if (!out)
            throw ConfigError("cannot write " + trace);
        for (const auto& line : r.trace)
            out << line << '\n';
    }

    const Verdict& v = r.verdict;
    switch (v.kind) {
    case Verdict::Kind::Error:
        std::cerr << "error: " << v.message << '\n';
        break;
    case Verdict::Kind::GardenPath:
        std::cout << "GARDEN_PATH " << v.index << ' ' << v.word << '\n';
        break;
    case Verdict::Kind::Ok:
    case Verdict::Kind::Awkward:
        std::cout << (v.kind == Verdict::Kind::Ok ? "OK" : "AWKWARD") << ' ' << v.finals.size() << '\n';
        for (const auto& s : v.finals) {
            Namer n;
            std::cout << "  " << bracketed(s.buffer.front(), n) << '\n';
            std::cout << "  " << to_string(s.terms(), n) << '\n';
            for (const auto& p : s.penalties)
                std::cout << "  penalty " << to_string(p, n) << '\n';
        }
        break;
    }
    return exit_code(v);
}

int scenarios_command(const std::string& dir)
{
    auto report = ccg::run_scenarios(dir);
    for (const auto& r : report.results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.context << "] expected " << r.expected
                  << " got " << r.actual;
        if (r.actual == "gp")
            std::cout << " at " << r.gp_index << ' ' << r.gp_word;
        std::cout << "  " << r.sentence << '\n';
    }
    std::cout << report.results.size() << " scenarios, " << report.seconds << " s\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Incremental CCG parser with garden-path adjudication"};
    app.require_subcommand(1);

    std::string lexicon, closed, discourse, plausibility, config, trace, sentence;
    auto* parse = app.add_subcommand("parse", "Parse one sentence");
    parse->add_option("--lexicon", lexicon, "Word/label lexicon file")->required()->check(CLI::ExistingFile);
    parse->add_option("--closed-class", closed, "Closed-class category file")->check(CLI::ExistingFile);
    parse->add_option("--discourse", discourse, "Prior-discourse atoms")->check(CLI::ExistingFile);
    parse->add_option("--plausibility", plausibility, "Implausible scenario patterns")->check(CLI::ExistingFile);
    parse->add_option("--config", config, "Penalty config (JSON)")->check(CLI::ExistingFile);
    parse->add_option("--trace", trace, "Write a JSONL trace here");
    parse->add_option("sentence", sentence, "The sentence")->required();

    std::string dir;
    auto* scenarios = app.add_subcommand("scenarios", "Scenario regression suite");
    auto* run = scenarios->add_subcommand("run", "Run DIR/manifest.json");
    run->add_option("dir", dir, "Scenario directory")->required()->check(CLI::ExistingDirectory);
    scenarios->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*parse)
            return parse_command(lexicon, closed, discourse, plausibility, config, trace, sentence);
        return scenarios_command(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
