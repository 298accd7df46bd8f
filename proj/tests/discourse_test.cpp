#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "ccg/discourse.hpp"
#include "support.hpp"

using namespace ccg;

namespace {

Value var_of(Scope& sc, const std::string& name) { return sc.lookup(name, VarKind::Index); }

// Tries every assignment of the query's variables to db constants.
std::set<std::string> brute_force(const TermList& q, const DiscourseDB& db, const Value& x)
{
    std::set<std::string> domain;
    for (const auto& a : db.atoms())
        domain.insert(a.args.begin(), a.args.end());
    std::vector<VarId> vars;
    for (const auto& t : q)
        for (const auto& a : t.args)
            if (a.is_var && std::find(vars.begin(), vars.end(), a.var) == vars.end())
                vars.push_back(a.var);
    std::vector<std::string> dom(domain.begin(), domain.end());
    std::set<std::string> out;
    if (dom.empty())
        return out;
    std::vector<std::size_t> pick(vars.size(), 0);
    for (;;) {
        auto value = [&](const Value& v) {
            if (!v.is_var)
                return v.atom;
            auto it = std::find(vars.begin(), vars.end(), v.var);
            return dom[pick[static_cast<std::size_t>(it - vars.begin())]];
        };
        bool all = true;
        for (const auto& t : q) {
            bool found = false;
            for (const auto& a : db.atoms()) {
                if (a.pred != t.pred || a.args.size() != t.args.size())
                    continue;
                bool eq = true;
                for (std::size_t i = 0; i < a.args.size() && eq; ++i)
                    eq = a.args[i] == value(t.args[i]);
                found = found || eq;
            }
            all = all && found;
        }
        if (all)
            out.insert(value(x));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < dom.size())
                break;
            pick[i] = 0;
        }
        if (i == pick.size())
            break;
    }
    return out;
}

std::vector<std::string> fixture_files()
{
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(std::string(CCG_DATA_DIR) + "/contexts"))
        if (e.path().extension() == ".facts")
            out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Query, EmptyDatabase)
{
    Scope sc;
    auto q = parse_terms("[horse(X)]", sc);
    EXPECT_TRUE(eval_query(q, DiscourseDB{}, var_of(sc, "X")).empty());
}

TEST(Query, TwoHorses)
{
    Scope sc;
    auto db = DiscourseDB::parse("horse(h1).\nhorse(h2).\n");
    auto q = parse_terms("[horse(X)]", sc);
    EXPECT_EQ(eval_query(q, db, var_of(sc, "X")), (std::set<std::string>{"h1", "h2"}));
}

TEST(Query, JoinNarrowsToOne)
{
    Scope sc;
    auto db = DiscourseDB::parse(R"(# two horses, one raced past the barn
horse(h1).
horse(h2).
race(ev, someone, h2).
tns(ev, en).
past(ev, b).
barn(b).
)");
    auto q = parse_terms("[horse(X), race(Y,Z,X), tns(Y,en), past(Y,P), barn(P)]", sc);
    EXPECT_EQ(eval_query(q, db, var_of(sc, "X")), std::set<std::string>{"h2"});
    EXPECT_EQ(brute_force(q, db, var_of(sc, "X")), std::set<std::string>{"h2"});
}

TEST(Query, ConstantsMustMatch)
{
    Scope sc;
    auto db = DiscourseDB::parse("name_of(j1,john).\nname_of(m1,mary).\n");
    auto q = parse_terms("[name_of(X,mary)]", sc);
    EXPECT_EQ(eval_query(q, db, var_of(sc, "X")), std::set<std::string>{"m1"});
}

TEST(Query, ParseErrors)
{
    EXPECT_THROW(DiscourseDB::parse("horse(h1"), std::runtime_error);
    EXPECT_THROW(DiscourseDB::load("/nonexistent.facts"), std::runtime_error);
}

TEST(Query, AgreesWithBruteForceOnFixtures)
{
    const std::vector<std::string> queries = {
        "[wife(X)]",
        "[psychologist(X)]",
        "[wife(X), dislike(E,P,X)]",
        "[dislike(E,P,X), psychologist(P), tns(E,ed)]",
        "[bird(X), find(E,A,X), in(E,N), nest(N)]",
        "[bird(X), find(E,A,X), in(E,G), garden(G), tns(E,en)]",
        "[bird(X), find(E,A,X), name_of(A,fred)]",
        "[third_pers(X), masculine(X)]",
        "[nest(X), in(E,X)]",
        "[bird(X), bird(Y), find(E,X,Y)]",
    };
    auto files = fixture_files();
    ASSERT_GE(files.size(), 5u);
    for (const auto& f : files) {
        auto db = DiscourseDB::load(f);
        for (const auto& text : queries) {
            Scope sc;
            auto q = parse_terms(text, sc);
            Value x = var_of(sc, "X");
            EXPECT_EQ(eval_query(q, db, x), brute_force(q, db, x)) << f << " " << text;
        }
    }
}

TEST(Query, AgreesWithBruteForceOnRandomDatabases)
{
    std::mt19937 rng(5);
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    const char* preds[] = {"p", "q", "r"};
    const char* consts[] = {"a", "b", "c", "d"};
    const char* vars[] = {"X", "Y", "Z"};
    for (int round = 0; round < 300; ++round) {
        DiscourseDB db;
        for (int i = 0, n = pick(8); i < n; ++i) {
            int ar = 1 + pick(2);
            GroundAtom a{preds[pick(3)], {}};
            for (int j = 0; j < ar; ++j)
                a.args.push_back(consts[pick(4)]);
            db.add(a);
        }
        std::string text = "[";
        for (int i = 0, n = 1 + pick(3); i < n; ++i) {
            if (i)
                text += ", ";
            text += std::string(preds[pick(3)]) + "(X";
            if (pick(2))
                text += std::string(",") + (pick(3) ? vars[pick(3)] : consts[pick(4)]);
            text += ")";
        }
        text += "]";
        Scope sc;
        auto q = parse_terms(text, sc);
        Value x = var_of(sc, "X");
        EXPECT_EQ(eval_query(q, db, x), brute_force(q, db, x)) << text;
    }
}

TEST(Plausibility, ParsesPatternsAndExplanations)
{
    auto p = PlausibilityDB::parse("[read(S,X), poem(X)]  # Poems can't read.\n\n# comment\n[stink(S,X), poet(X)]\n");
    ASSERT_EQ(p.patterns().size(), 2u);
    EXPECT_EQ(p.patterns()[0].explanation, "Poems can't read.");
    EXPECT_EQ(p.patterns()[0].terms.size(), 2u);
    EXPECT_EQ(pattern_variables(p.patterns()[0].terms).size(), 2u);
}

TEST(Plausibility, MatchesAgainstTerms)
{
    Scope ps;
    auto pattern = parse_terms("[read(S,X), poem(X)]", ps);
    Scope ts;
    auto terms = parse_terms("[the(B), poem(B), read(E,B), tns(E,ed), read(F,C)]", ts);
    auto rows = match_pattern(pattern, terms);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0][0], ts.lookup("E", VarKind::Index));
    EXPECT_EQ(rows[0][1], ts.lookup("B", VarKind::Index));
    auto none = parse_terms("[poem(B), read(E,C)]", ts);
    EXPECT_TRUE(match_pattern(pattern, none).empty());
}

TEST(Plausibility, ShippedPatterns)
{
    auto p = PlausibilityDB::load(std::string(CCG_DATA_DIR) + "/plausibility.txt");
    EXPECT_GE(p.patterns().size(), 5u);
}
