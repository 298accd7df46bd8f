#include "ccg/interpreter.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

namespace ccg {

namespace {

bool mentions(const SemTerm& t, const Value& x)
{
    return std::find(t.args.begin(), t.args.end(), x) != t.args.end();
}

bool has_term(const TermList& terms, std::string_view pred, const Value& x)
{
    for (const auto& t : terms)
        if (t.pred == pred && t.args.size() == 1 && t.args[0] == x)
            return true;
    return false;
}

// Restrictive atoms of the segment that mention only x (besides constants)
// and precede the first npmod(x): the phrase's head material.
TermList head_query(const TermList& terms, std::size_t from, const Value& x)
{
    TermList out;
    for (std::size_t i = from; i < terms.size(); ++i) {
        const SemTerm& t = terms[i];
        if (t.pred == "npmod" && t.args.size() == 1 && t.args[0] == x)
            break;
        if (is_nonrestrictive(t.pred) || !mentions(t, x))
            continue;
        bool only_x = std::all_of(t.args.begin(), t.args.end(), [&](const Value& v) { return !v.is_var || v == x; });
        if (only_x)
            out.push_back(t);
    }
    return out;
}

bool query_succeeds(const TermList& q, const DiscourseDB& db)
{
    for (const auto& t : q)
        for (const auto& v : t.args)
            if (v.is_var)
                return !eval_query(q, db, v).empty();
    // Fully ground query: every atom must be present.
    for (const auto& t : q) {
        bool found = false;
        for (const auto& a : db.atoms()) {
            if (a.pred != t.pred || a.args.size() != t.args.size())
                continue;
            bool eq = true;
            for (std::size_t k = 0; k < a.args.size(); ++k)
                eq = eq && a.args[k] == t.args[k].atom;
            found = found || eq;
        }
        if (!found)
            return false;
    }
    return true;
}

void implausibility(ParserState& s, const TermList& terms, const PlausibilityDB& p)
{
    for (const auto& pat : p.patterns()) {
        for (const auto& row : match_pattern(pat.terms, terms))
            if (!row.empty())
                s.add_penalty(PenaltyKind::implausibility, row.front(), s.word_clock);
    }
}

void new_subject(ParserState& s, const TermList& terms, const DiscourseDB& db)
{
    for (const auto& t : terms) {
        if (t.pred != "subj" || t.args.size() != 1)
            continue;
        const Value& x = t.args[0];
        if (is_pronoun(x, terms))
            continue;
        bool accommodated = s.has_penalty(PenaltyKind::accom_complex_description, x);
        for (const auto& a : s.annotations)
            accommodated = accommodated || (a.kind == Annotation::Kind::Accom && a.index == x);
        if (!accommodated && !has_term(terms, "the", x)) {
            // No definite marker: the phrase's own restrictive atoms decide.
            TermList own;
            for (const auto& u : terms)
                if (!is_nonrestrictive(u.pred) && mentions(u, x))
                    own.push_back(u);
            accommodated = !own.empty() && eval_query(own, db, x).empty();
        }
        if (accommodated)
            s.add_penalty(PenaltyKind::new_subject, x, s.word_clock);
    }
}

void heavy_arg_light_modifier(ParserState& s, const TermList& terms, const ClausalMap& clausal)
{
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].pred != "swa" || terms[j].args.size() != 1)
            continue;
        const Value& a = terms[j].args[0];
        for (std::size_t i = 0; i < j; ++i) {
            const SemTerm& p = terms[i];
            auto it = clausal.find(p.pred);
            if (it == clausal.end() || p.args.empty() || p.args[0] != a || it->second >= p.args.size())
                continue;
            const Value& y = p.args[it->second];
            bool contentful = false;
            for (std::size_t k = 0; k < terms.size() && !contentful; ++k) {
                const SemTerm& u = terms[k];
                contentful = k != i && !u.args.empty() && u.args[0] == y && !is_nonrestrictive(u.pred) &&
                             u.pred != "tns";
            }
            if (contentful)
                s.add_penalty(PenaltyKind::heavy_arg_light_modifier, a, s.word_clock);
        }
    }
}

void shifted_past_non_given(ParserState& s, const TermList& terms, const DiscourseDB& db)
{
    for (const auto& h : terms) {
        if (h.pred != "h_shifted" || h.args.size() != 2)
            continue;
        const Value& x = h.args[0];
        const Value& y = h.args[1];
        TermList q;
        std::vector<Value> reached;
        for (const auto& t : terms) {
            if (is_nonrestrictive(t.pred) || t.pred == "tns" || t.args.empty() || t.args[0] != y || mentions(t, x))
                continue;
            q.push_back(t);
            for (std::size_t k = 1; k < t.args.size(); ++k)
                if (t.args[k].is_index())
                    reached.push_back(t.args[k]);
        }
        if (q.empty())
            continue;
        for (const auto& t : terms) {
            if (is_nonrestrictive(t.pred) || mentions(t, y) || mentions(t, x))
                continue;
            bool hop = std::any_of(reached.begin(), reached.end(), [&](const Value& r) { return mentions(t, r); });
            if (hop)
                q.push_back(t);
        }
        if (!query_succeeds(q, db))
            s.add_penalty(PenaltyKind::shifted_past_non_given, y, s.word_clock);
    }
}

}  // namespace

TermList restrictive_query(const TermList& terms, std::size_t from)
{
    TermList out;
    for (std::size_t i = from; i < terms.size(); ++i)
        if (!is_nonrestrictive(terms[i].pred))
            out.push_back(terms[i]);
    return out;
}

bool is_pronoun(const Value& x, const TermList& terms)
{
    return has_term(terms, "first_pers", x) || has_term(terms, "second_pers", x) ||
           has_term(terms, "third_pers", x);
}

ParserState resolve_definites(ParserState s, const DiscourseDB& db)
{
    const TermList terms = s.terms();
    const int now = s.word_clock;
    for (std::size_t i = terms.size(); i-- > 0;) {
        const SemTerm& o = terms[i];
        if (o.pred != "the" || o.args.size() != 1)
            continue;
        const Value& x = o.args[0];
        if (s.has_annotation(x))
            continue;
        TermList q = restrictive_query(terms, i);
        if (q.empty())
            continue;
        auto c = eval_query(q, db, x);
        bool closed = has_term(terms, "phrase_closed", x);
        if (c.empty()) {
            if (closed)
                s.annotations.push_back({Annotation::Kind::Accom, x, {}, q});
            else
                s.add_penalty(PenaltyKind::accom_complex_description, x, now);
        } else if (c.size() == 1) {
            s.annotations.push_back({Annotation::Kind::Resolved, x, *c.begin(), {}});
            if (!closed) {
                s.add_penalty(PenaltyKind::overspecified_ref, x, now);
            } else if (has_term(terms, "npmod", x)) {
                TermList head = head_query(terms, i, x);
                if (!head.empty() && eval_query(head, db, x).size() == 1)
                    s.add_penalty(PenaltyKind::overspecified_ref, x, now);
            }
        } else if (closed) {
            s.annotations.push_back({Annotation::Kind::Resolved, x, *c.begin(), {}});
            s.add_penalty(PenaltyKind::underspecified_ref, x, now);
        }
    }
    return s;
}

ParserState assess_penalties(ParserState s, const DiscourseDB& db, const PlausibilityDB& p,
                             const ClausalMap& clausal)
{
    const TermList terms = s.terms();
    implausibility(s, terms, p);
    new_subject(s, terms, db);
    heavy_arg_light_modifier(s, terms, clausal);
    shifted_past_non_given(s, terms, db);
    return s;
}

ParserState interpret(ParserState s, const Interpreter& in)
{
    static const DiscourseDB kEmptyDb;
    static const PlausibilityDB kEmptyPlaus;
    const DiscourseDB& db = in.discourse ? *in.discourse : kEmptyDb;
    const PlausibilityDB& p = in.plausibility ? *in.plausibility : kEmptyPlaus;
    return assess_penalties(resolve_definites(std::move(s), db), db, p, in.clausal);
}

std::size_t disconnectedness(const TermList& terms)
{
    std::unordered_map<VarId, VarId> parent;
    std::function<VarId(VarId)> find = [&](VarId v) {
        VarId p = parent.at(v);
        if (p == v)
            return v;
        VarId r = find(p);
        parent[v] = r;
        return r;
    };
    for (const auto& t : terms) {
        if (is_nonrestrictive(t.pred))
            continue;
        std::optional<VarId> first;
        for (const auto& a : t.args) {
            if (!a.is_index())
                continue;
            parent.emplace(a.var, a.var);
            if (!first) {
                first = a.var;
                continue;
            }
            VarId ra = find(*first);
            VarId rb = find(a.var);
            if (ra != rb)
                parent[ra] = rb;
        }
    }
    std::size_t roots = 0;
    for (const auto& [v, p] : parent)
        roots += find(v) == v ? 1 : 0;
    return roots == 0 ? 0 : roots - 1;
}

}  // namespace ccg
