#include "ccg/state.hpp"

namespace ccg {

namespace {

constexpr std::array<std::string_view, kPenaltyKinds> kPenaltyNames = {
    "implausibility",      "underspecified_ref",       "overspecified_ref",     "accom_complex_description",
    "new_subject",         "heavy_arg_light_modifier", "shifted_past_non_given",
};

void key_tree(const ConstPtr& c, Namer& n, std::string& out)
{
    out += n.category(c->cat);
    out += ';';
}

}  // namespace

std::string_view penalty_name(PenaltyKind k) { return kPenaltyNames[static_cast<std::size_t>(k)]; }

std::optional<PenaltyKind> penalty_from_name(std::string_view s)
{
    for (std::size_t i = 0; i < kPenaltyKinds; ++i)
        if (kPenaltyNames[i] == s)
            return static_cast<PenaltyKind>(i);
    return std::nullopt;
}

TermList ParserState::terms() const
{
    TermList out;
    for (const auto& c : buffer) {
        auto t = constituent_terms(c);
        out.insert(out.end(), t.begin(), t.end());
    }
    out.insert(out.end(), pending.begin(), pending.end());
    return out;
}

bool ParserState::has_annotation(const Value& index) const
{
    for (const auto& a : annotations)
        if (a.index == index)
            return true;
    return false;
}

bool ParserState::has_penalty(PenaltyKind k, const Value& index) const
{
    for (const auto& p : penalties)
        if (p.kind == k && p.index == index)
            return true;
    return false;
}

void ParserState::add_penalty(PenaltyKind k, const Value& index, int now)
{
    if (!has_penalty(k, index))
        penalties.push_back({k, index, now});
}

ParserState apply(const Substitution& s, const ParserState& st)
{
    if (s.empty())
        return st;
    ParserState out;
    out.word_clock = st.word_clock;
    out.prior_terms = st.prior_terms;
    out.buffer.reserve(st.buffer.size());
    for (const auto& c : st.buffer)
        out.buffer.push_back(apply(s, c));
    out.pending = apply(s, st.pending);
    for (const auto& a : st.annotations) {
        Annotation b = a;
        b.index = s.apply(a.index);
        b.query = apply(s, a.query);
        out.annotations.push_back(std::move(b));
    }
    // Unification can merge two indices; keep the earliest of any duplicate.
    for (const auto& p : st.penalties)
        out.add_penalty(p.kind, s.apply(p.index), p.detected_at);
    return out;
}

std::string to_string(const Annotation& a, Namer& n)
{
    if (a.kind == Annotation::Kind::Resolved)
        return "resolved(" + n.value(a.index) + "," + a.entity + ")";
    return "accom(" + n.value(a.index) + "," + to_string(a.query, n) + ")";
}

std::string to_string(const TimedPenalty& p, Namer& n)
{
    return std::string(penalty_name(p.kind)) + "(" + n.value(p.index) + ")@" + std::to_string(p.detected_at);
}

std::string canonical_key(const ParserState& st)
{
    Namer n;
    std::string out;
    for (const auto& c : st.buffer)
        key_tree(c, n, out);
    out += '|';
    out += to_string(st.terms(), n);
    out += '|';
    for (const auto& a : st.annotations)
        out += to_string(a, n) + ';';
    out += '|';
    for (const auto& p : st.penalties)
        out += to_string(p, n) + ';';
    return out;
}

}  // namespace ccg
