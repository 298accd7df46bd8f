#pragma once

#include <map>
#include <string>

#include "ccg/discourse.hpp"
#include "ccg/state.hpp"

namespace ccg {

// Predicate name -> position of its clausal-complement argument.
using ClausalMap = std::map<std::string, std::size_t>;

struct Interpreter {
    const DiscourseDB* discourse = nullptr;
    const PlausibilityDB* plausibility = nullptr;
    ClausalMap clausal;
};

// Right-to-left scan over the(X) occurrences: resolves, accommodates, waits, or
// records accom_complex_description / overspecified_ref / underspecified_ref.
ParserState resolve_definites(ParserState s, const DiscourseDB& db);

// Adds implausibility, new_subject, heavy_arg_light_modifier and
// shifted_past_non_given penalties, stamped with the state's word clock.
ParserState assess_penalties(ParserState s, const DiscourseDB& db, const PlausibilityDB& p,
                             const ClausalMap& clausal);

ParserState interpret(ParserState s, const Interpreter& in);

// Components of the co-argument graph over semantic indices, minus one.
// Bookkeeping terms (the, subj, phrase_closed, ...) contribute no vertices.
std::size_t disconnectedness(const TermList& terms);

// The conjunction of restrictive atoms in terms[from..].
TermList restrictive_query(const TermList& terms, std::size_t from = 0);

bool is_pronoun(const Value& x, const TermList& terms);

}  // namespace ccg
