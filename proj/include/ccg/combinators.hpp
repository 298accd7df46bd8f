#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/term.hpp"

namespace ccg {

struct Rule {
    enum class Kind : std::uint8_t { Lex, Init, Eop, Forward, Backward };
    Kind kind = Kind::Lex;
    int degree = 0;
    bool crossing = false;

    static Rule lex() { return {Kind::Lex, 0, false}; }
    static Rule init() { return {Kind::Init, 0, false}; }
    static Rule eop() { return {Kind::Eop, 0, false}; }
    static Rule forward(int n) { return {Kind::Forward, n, false}; }
    static Rule backward(int n, bool crossing = false) { return {Kind::Backward, n, crossing}; }

    bool is_binary() const { return kind == Kind::Forward || kind == Kind::Backward; }
    std::string name() const;

    friend bool operator==(const Rule& a, const Rule& b)
    {
        return a.kind == b.kind && a.degree == b.degree && a.crossing == b.crossing;
    }
};

struct Constituent;
using ConstPtr = std::shared_ptr<const Constituent>;

// Derivation-tree node. Leaves (lex, init, eop) carry the surface word and
// their lexical terms; binary nodes carry the rule's term delta.
struct Constituent {
    CatPtr cat;
    Rule rule;
    std::string word;
    TermList terms;
    ConstPtr left;
    ConstPtr right;

    bool is_leaf() const { return !left; }
};

ConstPtr make_leaf(CatPtr cat, Rule rule, std::string word, TermList terms);
ConstPtr make_node(CatPtr cat, Rule rule, ConstPtr left, ConstPtr right, TermList delta = {});

// Applies a substitution to every category and term in a tree.
ConstPtr apply(const Substitution& s, const ConstPtr& c);

// In-order concatenation of leaf terms and node deltas.
TermList constituent_terms(const ConstPtr& c);

std::size_t leaf_count(const ConstPtr& c);

struct RuleMatch {
    Rule rule;
    Substitution unifier;
    CatPtr result;   // already substituted
    TermList delta;  // already substituted
};

inline constexpr int kMaxComposition = 3;

// Every rule instance of >0..>3, <0 and <1x whose schema unifies with the inputs.
std::vector<RuleMatch> applicable_rules(const CatPtr& left, const CatPtr& right);

// Builds the parent node; the caller applies m.unifier to the surrounding state.
ConstPtr combine(const ConstPtr& left, const ConstPtr& right, const RuleMatch& m);

// False exactly for forward rules whose left category has the form _/(_/np:_).
bool is_obligatory(const Rule& rule, const CatPtr& left);

// Rule application by structure alone (no unification): forward rules take
// A/B and peel `degree` arguments off the right category, backward rules take
// A\B on the right and peel them off the left. Returns null on shape mismatch.
CatPtr apply_structural(const Rule& rule, const CatPtr& left, const CatPtr& right);

}  // namespace ccg
