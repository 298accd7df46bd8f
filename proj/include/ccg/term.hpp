#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccg/category.hpp"

namespace ccg {

struct SemTerm {
    std::string pred;
    std::vector<Value> args;

    friend bool operator==(const SemTerm& a, const SemTerm& b)
    {
        return a.pred == b.pred && a.args == b.args;
    }
};

using TermList = std::vector<SemTerm>;

SemTerm make_term(std::string pred, std::vector<Value> args);

SemTerm apply(const Substitution& s, const SemTerm& t);
TermList apply(const Substitution& s, const TermList& ts);
TermList rename(Renamer& r, const TermList& ts);

// Bookkeeping predicates that never restrict reference.
bool is_nonrestrictive(std::string_view pred);

std::string to_string(const SemTerm& t, Namer& n);
std::string to_string(const TermList& ts, Namer& n);

// Parses `[p(A,b), q(C)]` or a single `p(A,b)`; shares variables with scope.
TermList parse_terms(std::string_view text, Scope& scope);
SemTerm parse_term(std::string_view text, Scope& scope);

}  // namespace ccg
