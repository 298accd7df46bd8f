#include <gtest/gtest.h>

#include <set>

#include "ccg/runner.hpp"
#include "support.hpp"

using namespace ccg;

namespace {

std::string data(const std::string& rel) { return std::string(CCG_DATA_DIR) + "/" + rel; }

const Lexicon& shipped()
{
    static Lexicon lex = [] {
        Lexicon l;
        l.load_words(data("lexicon.tsv"));
        l.load_closed(data("closed_class.tsv"));
        return l;
    }();
    return lex;
}

const Lexicon& catalan()
{
    static Lexicon lex = [] {
        Lexicon l;
        l.load_closed(std::string(CCG_TEST_DATA_DIR) + "/catalan.tsv");
        return l;
    }();
    return lex;
}

const PlausibilityDB& plausibility()
{
    static PlausibilityDB p = PlausibilityDB::load(data("plausibility.txt"));
    return p;
}

Engine make_engine(const Lexicon& lex, const DiscourseDB* db, bool discarding = true)
{
    PenaltyConfig cfg = PenaltyConfig::defaults();
    cfg.discarding = discarding;
    return Engine(lex, Interpreter{db, &plausibility(), lex.clausal_predicates()}, cfg);
}

ConstPtr leaf(std::string_view cat, Scope& sc) { return make_leaf(parse_category(cat, sc), Rule::lex(), "w", {}); }

ParserState alone(std::string_view cat, std::string_view terms)
{
    Scope sc;
    ParserState s;
    s.buffer.push_back(make_leaf(parse_category(cat, sc), Rule::lex(), "w", parse_terms(terms, sc)));
    return s;
}

std::string terms_of(const TermList& ts)
{
    Namer n;
    return to_string(ts, n);
}

TermList without_closures(const TermList& ts)
{
    TermList out;
    for (const auto& t : ts)
        if (t.pred != "phrase_closed")
            out.push_back(t);
    return out;
}

// Every binary node is an instance of its rule over its daughters.
void expect_sound(const ConstPtr& c)
{
    if (c->is_leaf())
        return;
    expect_sound(c->left);
    expect_sound(c->right);
    bool found = false;
    for (const auto& m : applicable_rules(c->left->cat, c->right->cat))
        found = found || (m.rule == c->rule && unify(m.result, c->cat).has_value());
    EXPECT_TRUE(found) << c->rule.name();
}

const std::vector<std::string> kCatalanWords = {"john", "was", "thinking", "that", "bill", "had", "left"};

}  // namespace

TEST(Engine, InitialState)
{
    auto s = init_state();
    ASSERT_EQ(s.buffer.size(), 1u);
    EXPECT_EQ(s.buffer[0]->rule, Rule::init());
    EXPECT_TRUE(s.terms().empty());
    EXPECT_TRUE(s.penalties.empty());
    EXPECT_TRUE(s.annotations.empty());
    EXPECT_EQ(s.word_clock, 0);
    Namer n;
    EXPECT_EQ(n.category(s.buffer[0]->cat), "tls(s1,+,s2):e1/eop:e1/s(s1,+,s2):e1");
}

TEST(Admissible, DeterminerBeforeVerb)
{
    Scope sc;
    EXPECT_FALSE(buffer_admissible({leaf("np(3,N):X/eop:X/n(N):X", sc), leaf("s(s,+,0):E\\np(3,sg):Y/np(P,M):Z", sc)}));
}

TEST(Admissible, OptionalCombinationMayWait)
{
    Scope sc;
    EXPECT_TRUE(buffer_admissible(
        {leaf("s(ed,+,q):E/(s(ed,+,q):F/np(3,sg):E)", sc), leaf("s(ed,+,q):F/np(P,N):G", sc)}));
}

TEST(Admissible, ObligatoryApplicationPending)
{
    Scope sc;
    EXPECT_FALSE(buffer_admissible({leaf("np(3,N):X/eop:X/n(N):X", sc), leaf("n(sg):Y", sc)}));
    EXPECT_TRUE(buffer_admissible({leaf("np(3,N):X/eop:X/n(N):X", sc)}));
}

TEST(Admissible, BackwardModifierAfterClause)
{
    Scope sc;
    EXPECT_TRUE(buffer_admissible({leaf("s(ed,+,0):E", sc), leaf("s(T,F,0):S\\s(T,F,0):S/np(P,N):X", sc)}));
    EXPECT_TRUE(
        buffer_admissible({leaf("s(ed,+,0):E/np(P,N):X", sc), leaf("s(T,F,0):S\\s(T,F,0):S/np(Q,M):Y", sc)}));
    // Crossing composition is obligatory, so the unreduced pair is not.
    EXPECT_FALSE(buffer_admissible({leaf("s(ed,+,0):E/np(P,N):X", sc), leaf("s(T,F,0):S\\s(T,F,0):S", sc)}));
}

TEST(Dedupe, AlphaVariantsCollapse)
{
    auto a = alone("s(ed,+,0):E\\np(3,sg):X", "[walk(E,X)]");
    auto b = alone("s(ed,+,0):F\\np(3,sg):Y", "[walk(F,Y)]");
    EXPECT_EQ(dedupe({a, b}).size(), 1u);
    auto c = alone("s(ed,+,0):E\\np(3,sg):X", "[walk(X,E)]");
    EXPECT_EQ(dedupe({a, c}).size(), 2u);
}

TEST(Dedupe, PenaltiesDistinguish)
{
    auto a = alone("s(ed,+,0):E", "[walk(E)]");
    auto b = a;
    b.add_penalty(PenaltyKind::new_subject, Value::fresh(VarKind::Index), 1);
    EXPECT_EQ(dedupe({a, b}).size(), 2u);
    auto c = b;
    c.add_penalty(PenaltyKind::new_subject, b.penalties[0].index, 1);
    EXPECT_EQ(c.penalties.size(), 1u);
}

TEST(Engine, WorkedExample)
{
    DiscourseDB empty;
    auto engine = make_engine(shipped(), &empty);
    auto r = run_sentence(tokenize("The poet read in the garden stank."), engine);
    EXPECT_EQ(r.verdict.kind, Verdict::Kind::GardenPath);
    EXPECT_EQ(r.verdict.index, 7);
    EXPECT_EQ(r.verdict.word, "stank");
    ASSERT_EQ(r.live_counts.size(), 7u);
    std::vector<std::size_t> at_content = {r.live_counts[1], r.live_counts[2], r.live_counts[3], r.live_counts[5],
                                           r.live_counts[6]};
    EXPECT_EQ(at_content, (std::vector<std::size_t>{2, 3, 1, 2, 0}));
}

TEST(Engine, WorkedExamplePenalties)
{
    DiscourseDB empty;
    auto engine = make_engine(shipped(), &empty);
    auto states = engine.start();
    states = engine.advance(states, "The").survivors;
    states = engine.advance(states, "poet").survivors;
    std::size_t open_penalized = 0;
    for (const auto& s : states)
        for (const auto& p : s.penalties)
            if (p.kind == PenaltyKind::accom_complex_description) {
                EXPECT_EQ(p.detected_at, 2);
                ++open_penalized;
            }
    EXPECT_EQ(open_penalized, 1u);

    states = engine.advance(states, "read").survivors;
    auto in = engine.advance(states, "in");
    std::size_t shifted = 0, discarded = 0;
    for (std::size_t i = 0; i < in.candidates.size(); ++i) {
        bool accom = false, shift = false;
        for (const auto& p : in.candidates[i].penalties) {
            accom = accom || p.kind == PenaltyKind::accom_complex_description;
            shift = shift || p.kind == PenaltyKind::shifted_past_non_given;
        }
        shifted += shift ? 1 : 0;
        if (accom || shift) {
            EXPECT_FALSE(in.kept[i]);
            ++discarded;
        }
    }
    EXPECT_EQ(shifted, 1u);
    EXPECT_EQ(discarded, 2u);
    EXPECT_EQ(in.survivors.size(), 1u);
}

TEST(Engine, ImplausibleMainVerbDiscarded)
{
    DiscourseDB empty;
    auto engine = make_engine(shipped(), &empty);
    auto states = engine.start();
    for (const auto& w : {"The", "poem", "read"})
        states = engine.advance(states, w).survivors;
    ASSERT_FALSE(states.empty());
    for (const auto& s : states) {
        EXPECT_EQ(s.buffer.size(), 2u) << terms_of(s.terms());
        for (const auto& p : s.penalties)
            EXPECT_NE(p.kind, PenaltyKind::implausibility);
    }
}

TEST(Engine, LexicalGap)
{
    auto engine = make_engine(shipped(), nullptr);
    EXPECT_THROW(engine.advance(engine.start(), "zzyzx"), LexicalGap);
}

TEST(Engine, WordClockCountsSurfaceWords)
{
    auto engine = make_engine(shipped(), nullptr, false);
    auto states = engine.start();
    auto words = tokenize("The poet said that the psychologist fell yesterday.");
    for (std::size_t i = 0; i < words.size(); ++i) {
        states = engine.advance(states, words[i]).survivors;
        for (const auto& s : states) {
            EXPECT_EQ(s.word_clock, static_cast<int>(i + 1));
            for (const auto& p : s.penalties)
                EXPECT_LE(p.detected_at, s.word_clock);
        }
    }
    for (const auto& s : engine.finish(states).survivors)
        EXPECT_EQ(s.word_clock, static_cast<int>(words.size()));
}

TEST(Engine, SurvivorsAreSoundAndAdmissible)
{
    DiscourseDB empty;
    auto engine = make_engine(shipped(), &empty, false);
    for (const char* sentence : {"The bird found in the nest a nice juicy worm", "Without her contributions the charity failed",
                                 "The psychologist told the wife that he disliked Florida"}) {
        auto states = engine.start();
        for (const auto& w : tokenize(sentence)) {
            states = engine.advance(states, w).survivors;
            for (const auto& s : states) {
                EXPECT_TRUE(buffer_admissible(s.buffer)) << sentence << " @" << w;
                for (const auto& c : s.buffer)
                    expect_sound(c);
            }
        }
    }
}

TEST(Catalan, OneStatePerWord)
{
    for (bool discarding : {true, false}) {
        auto engine = make_engine(catalan(), nullptr, discarding);
        auto states = engine.start();
        for (const auto& w : kCatalanWords) {
            states = engine.advance(states, w).survivors;
            EXPECT_EQ(states.size(), 1u) << w;
            ASSERT_FALSE(states.empty());
            EXPECT_EQ(states[0].buffer.size(), 1u) << w;
        }
        auto end = engine.finish(states);
        EXPECT_EQ(end.survivors.size(), 1u);
    }
}

TEST(Catalan, OracleCountsAllBracketings)
{
    std::vector<CatPtr> cats;
    for (const auto& w : kCatalanWords)
        cats.push_back(catalan().lookup(w).at(0).cat);
    EXPECT_EQ(enumerate_derivations(cats).size(), 132u);
}

// The complete analyses the engine reports coincide with the oracle's
// equivalence classes: one per distinct (root category, term list).
TEST(Completeness, MatchesExhaustiveOracle)
{
    const std::vector<std::vector<std::string>> inputs = {
        kCatalanWords,
        {"john", "was", "thinking", "that", "bill", "left"},
        {"bill", "had", "left"},
        {"john", "left"},
    };
    for (const auto& words : inputs) {
        std::vector<ConstPtr> leaves;
        for (const auto& w : words) {
            auto e = catalan().lookup(w).at(0);
            leaves.push_back(make_leaf(e.cat, Rule::lex(), w, e.terms));
        }
        std::set<std::string> oracle;
        for (const auto& d : enumerate_derivations(leaves))
            oracle.insert(terms_of(constituent_terms(d)));

        auto engine = make_engine(catalan(), nullptr, false);
        auto states = engine.start();
        for (const auto& w : words)
            states = engine.advance(states, w).survivors;
        std::set<std::string> got;
        for (const auto& s : engine.finish(states).survivors)
            got.insert(terms_of(without_closures(s.terms())));
        EXPECT_EQ(got, oracle) << words.size();
    }
}

TEST(PictureNouns, CombinedAndUncombinedBothLive)
{
    auto engine = make_engine(shipped(), nullptr);
    auto states = engine.start();
    for (const auto& w : tokenize("Which house did you paint"))
        states = engine.advance(states, w).survivors;
    std::set<std::size_t> sizes;
    for (const auto& s : states)
        sizes.insert(s.buffer.size());
    EXPECT_TRUE(sizes.count(1));
    EXPECT_TRUE(sizes.count(2));
}

TEST(PictureNouns, DelayedGapCompletes)
{
    auto engine = make_engine(shipped(), nullptr);
    for (const char* sentence : {"Which house did you paint a picture of",
                                 "Which house did you say that he painted a nice picture of"}) {
        auto r = run_sentence(tokenize(sentence), engine);
        EXPECT_EQ(r.verdict.kind, Verdict::Kind::Ok) << sentence;
        ASSERT_FALSE(r.verdict.finals.empty());
        bool picture_of_house = false;
        for (const auto& s : r.verdict.finals) {
            Value house;
            for (const auto& t : s.terms()) {
                if (t.pred == "house")
                    house = t.args[0];
                if (t.pred == "of")
                    picture_of_house = picture_of_house || t.args[1] == house;
            }
        }
        EXPECT_TRUE(picture_of_house) << sentence;
    }
}
