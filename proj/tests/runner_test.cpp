#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "ccg/runner.hpp"
#include "support.hpp"

using namespace ccg;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& rel) { return std::string(CCG_DATA_DIR) + "/" + rel; }

struct Fixture {
    Lexicon lexicon;
    PlausibilityDB plausibility = PlausibilityDB::load(data("plausibility.txt"));
    Fixture()
    {
        lexicon.load_words(data("lexicon.tsv"));
        lexicon.load_closed(data("closed_class.tsv"));
    }
};

const Fixture& fixture()
{
    static Fixture f;
    return f;
}

RunResult run(const std::string& sentence, const DiscourseDB& db, PenaltyConfig cfg = PenaltyConfig::defaults())
{
    Engine engine(fixture().lexicon, Interpreter{&db, &fixture().plausibility, fixture().lexicon.clausal_predicates()},
                  cfg);
    return run_sentence(tokenize(sentence), engine);
}

fs::path scratch_dir(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("ccg_runner_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST(Tokenize, DropsPunctuationKeepsCase)
{
    EXPECT_EQ(tokenize("The poet read in the garden stank."),
              (std::vector<std::string>{"The", "poet", "read", "in", "the", "garden", "stank"}));
    EXPECT_EQ(tokenize("  Which house, did you paint?  "),
              (std::vector<std::string>{"Which", "house", "did", "you", "paint"}));
    EXPECT_TRUE(tokenize(" . ").empty());
}

TEST(Verdict, ExitCodes)
{
    Verdict v;
    v.kind = Verdict::Kind::Ok;
    EXPECT_EQ(exit_code(v), 0);
    v.kind = Verdict::Kind::GardenPath;
    EXPECT_EQ(exit_code(v), 2);
    v.kind = Verdict::Kind::Awkward;
    EXPECT_EQ(exit_code(v), 3);
    v.kind = Verdict::Kind::Error;
    EXPECT_EQ(exit_code(v), 1);
    EXPECT_EQ(verdict_name(Verdict::Kind::GardenPath), "gp");
    EXPECT_EQ(verdict_name(Verdict::Kind::Ok), "ok");
    EXPECT_EQ(verdict_name(Verdict::Kind::Awkward), "awkward");
}

TEST(Run, GardenPathAtWord)
{
    auto r = run("The poet read in the garden stank.", DiscourseDB{});
    EXPECT_EQ(r.verdict.kind, Verdict::Kind::GardenPath);
    EXPECT_EQ(r.verdict.index, 7);
    EXPECT_EQ(r.trace.size(), 7u);
}

TEST(Run, OkReportsFinalStates)
{
    auto r = run("The poem read in the garden stank.", DiscourseDB{});
    ASSERT_EQ(r.verdict.kind, Verdict::Kind::Ok);
    ASSERT_FALSE(r.verdict.finals.empty());
    for (const auto& s : r.verdict.finals)
        EXPECT_EQ(s.buffer.size(), 1u);
    EXPECT_EQ(r.trace.size(), 8u);
}

TEST(Run, Awkward)
{
    auto r = run("The poet said that the psychologist will fall yesterday.", DiscourseDB{});
    EXPECT_EQ(r.verdict.kind, Verdict::Kind::Awkward);
    EXPECT_EQ(exit_code(r.verdict), 3);
}

TEST(Run, LexicalGapIsAnError)
{
    auto r = run("The poet zzyzx.", DiscourseDB{});
    EXPECT_EQ(r.verdict.kind, Verdict::Kind::Error);
    EXPECT_EQ(r.verdict.word, "zzyzx");
    EXPECT_NE(r.verdict.message.find("zzyzx"), std::string::npos);
    EXPECT_EQ(exit_code(r.verdict), 1);
}

TEST(Trace, LinesAreJsonEvents)
{
    auto r = run("The poet read in the garden stank.", DiscourseDB{});
    int clock = 0;
    for (const auto& line : r.trace) {
        auto e = nlohmann::json::parse(line);
        EXPECT_EQ(e.at("word_clock").get<int>(), ++clock);
        ASSERT_TRUE(e.at("states").is_array());
        for (const auto& s : e.at("states")) {
            EXPECT_TRUE(s.contains("buffer"));
            EXPECT_TRUE(s.contains("terms"));
            EXPECT_TRUE(s.contains("penalties"));
            EXPECT_TRUE(s.contains("score"));
            EXPECT_TRUE(s.contains("kept"));
        }
    }
}

TEST(Trace, Deterministic)
{
    auto db = DiscourseDB::load(data("contexts/two_wife.facts"));
    auto a = run("The psychologist told the wife that he disliked that he liked Florida.", db);
    auto b = run("The psychologist told the wife that he disliked that he liked Florida.", db);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.live_counts, b.live_counts);
}

TEST(Display, HidesTopLevelWrapper)
{
    Scope sc;
    auto c = parse_category("tls(ed,+,0):E/eop:E/np(P,N):X", sc);
    Namer n;
    EXPECT_EQ(display_category(c, n), "s(ed,+,0):e1/np(s1,s2):e2");
    Namer m;
    EXPECT_EQ(display_category(c, m, true), "tls(ed,+,0):e1/eop:e1/np(s1,s2):e2");
}

TEST(Scenarios, ShippedSuitePasses)
{
    auto report = run_scenarios(CCG_SCENARIO_DIR);
    ASSERT_EQ(report.results.size(), 16u);
    for (const auto& r : report.results)
        EXPECT_TRUE(r.pass) << r.id << " expected " << r.expected << " got " << r.actual << " at " << r.gp_index;
    EXPECT_TRUE(report.all_passed());
}

TEST(Scenarios, MissingFixture)
{
    auto dir = scratch_dir("missing");
    write(dir / "manifest.json", R"({"lexicon": "nope.tsv", "closed_class": "nope.tsv",
        "plausibility": "nope.txt", "contexts": {}, "scenarios": []})");
    EXPECT_THROW(run_scenarios(dir.string()), ConfigError);
    EXPECT_THROW(run_scenarios((dir / "absent").string()), ConfigError);
}

TEST(Scenarios, MalformedManifest)
{
    auto dir = scratch_dir("malformed");
    write(dir / "manifest.json", "{ not json");
    EXPECT_THROW(run_scenarios(dir.string()), ConfigError);
}

TEST(Scenarios, UnknownContext)
{
    auto dir = scratch_dir("context");
    write(dir / "manifest.json", "{\"lexicon\": \"" + data("lexicon.tsv") + "\", \"closed_class\": \"" +
                                     data("closed_class.tsv") + "\", \"plausibility\": \"" + data("plausibility.txt") +
                                     "\", \"contexts\": {}, \"scenarios\": [{\"id\": 1, \"context\": \"elsewhere\", "
                                     "\"sentence\": \"The poet fell.\", \"expect\": \"ok\"}]}");
    EXPECT_THROW(run_scenarios(dir.string()), ConfigError);
}
