#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/term.hpp"

namespace ccg {

struct GroundAtom {
    std::string pred;
    std::vector<std::string> args;
};

// Read-only store of the prior discourse: ground atoms `pred(c1,c2).`
class DiscourseDB {
public:
    void add(GroundAtom a);
    // One atom per line; blank lines and `#` comments are ignored.
    static DiscourseDB parse(std::string_view text);
    static DiscourseDB load(const std::string& path);

    const std::vector<GroundAtom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

private:
    std::vector<GroundAtom> atoms_;
};

struct PlausibilityPattern {
    TermList terms;
    std::string explanation;
};

// Hand-coded implausible scenarios, one pattern per line:
// `[read(S,X), poem(X)]  # Poems can't read.`
class PlausibilityDB {
public:
    void add(std::string_view pattern, std::string explanation = {});
    static PlausibilityDB parse(std::string_view text);
    static PlausibilityDB load(const std::string& path);

    const std::vector<PlausibilityPattern>& patterns() const { return patterns_; }

private:
    std::vector<PlausibilityPattern> patterns_;
};

// Values of x for which every atom of the conjunctive query has a match in db.
// Query variables are the terms' variables; atoms must match exactly.
std::set<std::string> eval_query(const TermList& query, const DiscourseDB& db, const Value& x);

// Every way of matching all pattern terms against terms of `terms`, as the
// value bound to each pattern variable (in order of the pattern's variables).
std::vector<std::vector<Value>> match_pattern(const TermList& pattern, const TermList& terms);

// Pattern variables in order of first occurrence.
std::vector<VarId> pattern_variables(const TermList& pattern);

}  // namespace ccg
