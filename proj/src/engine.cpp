#include "ccg/engine.hpp"

#include <algorithm>
#include <unordered_set>

namespace ccg {

namespace {

struct Anticipation {
    Substitution unifier;
    TermList delta;
};

bool is_eop_seeker(const CatPtr& c, bool final)
{
    if (!c->is_forward() || !c->arg->is_basic() || c->arg->head != Head::eop)
        return false;
    bool top_level = c->result->is_basic() && c->result->head == Head::tls;
    return final || !top_level;
}

// Right-frontier nodes of the normal form, excluding the root, with their paths.
std::vector<std::pair<NodePath, ConstPtr>> frontier_below_root(const Derivation& nf)
{
    std::vector<std::pair<NodePath, ConstPtr>> out;
    NodePath path;
    for (ConstPtr p = nf; !p->is_leaf();) {
        p = p->right;
        path.push_back('R');
        out.emplace_back(path, p);
    }
    return out;
}

// Terms produced by a rule that were already recorded in anticipation are
// dropped from the pending list so they are counted once.
void absorb_pending(ParserState& s, const TermList& delta)
{
    for (const auto& t : delta) {
        auto it = std::find(s.pending.begin(), s.pending.end(), t);
        if (it != s.pending.end())
            s.pending.erase(it);
    }
}

ParserState replace_last_two(const ParserState& s, ConstPtr node, const Substitution& u, const TermList& delta)
{
    ParserState t = s;
    t.buffer.pop_back();
    t.buffer.back() = std::move(node);
    t = apply(u, t);
    absorb_pending(t, apply(u, delta));
    return t;
}

void closure(const ParserState& s, bool final, std::vector<ParserState>& out)
{
    out.push_back(s);
    const Buffer& b = s.buffer;
    const std::size_t n = b.size();
    if (n >= 2) {
        const ConstPtr& x = b[n - 2];
        const ConstPtr& y = b[n - 1];
        // Method 1: combine the two rightmost constituents.
        for (const auto& m : applicable_rules(x->cat, y->cat))
            closure(replace_last_two(s, make_node(m.result, m.rule, x, y, m.delta), m.unifier, m.delta), final, out);
        // Method 2: attach a backward modifier inside the left neighbour.
        if (is_backward_modifier(y->cat)) {
            Derivation nf = right_normal_form(x);
            for (const auto& [path, node] : frontier_below_root(nf)) {
                for (const auto& m : applicable_rules(node->cat, y->cat)) {
                    if (m.rule.kind != Rule::Kind::Backward)
                        continue;
                    Derivation tree = replace_at(nf, path, make_node(m.result, m.rule, node, y, m.delta));
                    closure(replace_last_two(s, tree, m.unifier, m.delta), final, out);
                }
            }
        }
    }
    // Zero morpheme: close the phrase the rightmost constituent is waiting on.
    const ConstPtr& r = b.back();
    if (is_eop_seeker(r->cat, final)) {
        LexEntry e = eop_entry();
        Renamer rn;
        CatPtr cat = rn(e.cat);
        TermList terms = rename(rn, e.terms);
        Substitution u;
        if (u.unify(r->cat->arg, cat)) {
            ParserState t = s;
            t.buffer.back() =
                make_node(u.apply(r->cat->result), Rule::forward(0), r, make_leaf(cat, Rule::eop(), "", terms));
            closure(apply(u, t), final, out);
        }
    }
}

bool obligatory_combination(const ConstPtr& x, const ConstPtr& y)
{
    for (const auto& m : applicable_rules(x->cat, y->cat))
        if (is_obligatory(m.rule, x->cat))
            return true;
    if (is_backward_modifier(y->cat)) {
        for (const auto& [path, node] : frontier_below_root(right_normal_form(x)))
            for (const auto& m : applicable_rules(node->cat, y->cat))
                if (m.rule.kind == Rule::Kind::Backward)
                    return true;
    }
    return false;
}

// BackDollar and RevealDollar: rules that could combine X (or a right-frontier
// node of its normal form) with the backward core A\B of Y = A\B/...
std::vector<Anticipation> anticipations(const ConstPtr& x, const ConstPtr& y, bool first_only)
{
    std::vector<Anticipation> out;
    CatPtr core = y->cat;
    while (core->is_forward())
        core = core->result;
    if (!core->is_backward())
        return out;
    for (auto& m : applicable_rules(x->cat, core)) {
        out.push_back({std::move(m.unifier), std::move(m.delta)});
        if (first_only)
            return out;
    }
    // Revealing only ever attaches modifiers, so only W\W is anticipated there.
    if (!is_backward_modifier(core))
        return out;
    for (const auto& [path, node] : frontier_below_root(right_normal_form(x))) {
        for (auto& m : applicable_rules(node->cat, core)) {
            if (m.rule.kind != Rule::Kind::Backward)
                continue;
            out.push_back({std::move(m.unifier), std::move(m.delta)});
            if (first_only)
                return out;
        }
    }
    return out;
}

bool pair_admissible(const ConstPtr& x, const ConstPtr& y)
{
    if (obligatory_combination(x, y))
        return false;
    return uh_match(x->cat, y->cat) || !anticipations(x, y, true).empty();
}

}  // namespace

ParserState init_state()
{
    LexEntry e = init_entry();
    ParserState s;
    s.buffer.push_back(make_leaf(e.cat, Rule::init(), "", e.terms));
    return s;
}

std::vector<ParserState> reduce_closure(const ParserState& s, bool final)
{
    std::vector<ParserState> out;
    closure(s, final, out);
    return out;
}

bool uh_match(const CatPtr& x, const CatPtr& y)
{
    if (!x->is_forward())
        return false;
    for (CatPtr zx = x->arg;; zx = zx->result) {
        for (CatPtr zy = y;; zy = zy->result) {
            if (unify(zx, zy))
                return true;
            if (!zy->is_forward())
                break;
        }
        if (!zx->is_forward())
            break;
    }
    return false;
}

bool buffer_admissible(const Buffer& b)
{
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (!pair_admissible(b[i], b[i + 1]))
            return false;
    return true;
}

std::vector<ParserState> admissible_variants(const ParserState& s)
{
    const Buffer& b = s.buffer;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (!pair_admissible(b[i], b[i + 1]))
            return {};
    if (n < 2)
        return {s};
    const ConstPtr& x = b[n - 2];
    const ConstPtr& y = b[n - 1];
    if (obligatory_combination(x, y))
        return {};
    if (uh_match(x->cat, y->cat))
        return {s};
    std::vector<ParserState> out;
    for (const auto& a : anticipations(x, y, false)) {
        ParserState t = apply(a.unifier, s);
        const TermList existing = t.terms();
        for (const auto& d : apply(a.unifier, a.delta))
            if (std::find(existing.begin(), existing.end(), d) == existing.end())
                t.pending.push_back(d);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ParserState> dedupe(const std::vector<ParserState>& states)
{
    std::vector<ParserState> out;
    std::unordered_set<std::string> seen;
    for (const auto& s : states)
        if (seen.insert(canonical_key(s)).second)
            out.push_back(s);
    return out;
}

bool is_complete(const ParserState& s)
{
    return s.buffer.size() == 1 && s.buffer[0]->cat->is_basic() && s.buffer[0]->cat->head == Head::tls;
}

Engine::Engine(const Lexicon& lexicon, Interpreter interpreter, PenaltyConfig config)
    : lexicon_(lexicon), interpreter_(std::move(interpreter)), config_(std::move(config))
{
}

StepResult Engine::advance(const std::vector<ParserState>& states, const std::string& word) const
{
    const auto entries = lexicon_.lookup(word);
    const int now = states.empty() ? 1 : states.front().word_clock + 1;
    std::vector<ParserState> candidates;
    for (const auto& s : states) {
        for (const auto& e : entries) {
            ParserState t = s;
            t.word_clock = now;
            t.prior_terms = t.terms().size();
            t.buffer.push_back(make_leaf(e.cat, Rule::lex(), word, e.terms));
            for (const auto& c : reduce_closure(t))
                for (auto& v : admissible_variants(c))
                    candidates.push_back(std::move(v));
        }
    }
    candidates = dedupe(candidates);
    for (auto& c : candidates)
        c = interpret(std::move(c), interpreter_);
    return settle(dedupe(candidates), now);
}

StepResult Engine::finish(const std::vector<ParserState>& states) const
{
    const int now = states.empty() ? 1 : states.front().word_clock + 1;
    std::vector<ParserState> candidates;
    for (const auto& s : states)
        for (auto& c : reduce_closure(s, true))
            if (is_complete(c))
                candidates.push_back(std::move(c));
    candidates = dedupe(candidates);
    for (auto& c : candidates)
        c = interpret(std::move(c), interpreter_);
    return settle(dedupe(candidates), now);
}

StepResult Engine::settle(std::vector<ParserState> candidates, int now) const
{
    StepResult r;
    r.now = now;
    r.candidates = std::move(candidates);
    r.kept.assign(r.candidates.size(), true);
    if (r.candidates.empty())
        return r;
    if (config_.discarding) {
        std::vector<int> scores;
        for (const auto& c : r.candidates)
            scores.push_back(state_score(c, now, config_));
        int best = *std::min_element(scores.begin(), scores.end());
        for (std::size_t i = 0; i < scores.size(); ++i)
            r.kept[i] = scores[i] == best;
    }
    for (std::size_t i = 0; i < r.candidates.size(); ++i)
        if (r.kept[i])
            r.survivors.push_back(r.candidates[i]);
    return r;
}

}  // namespace ccg
