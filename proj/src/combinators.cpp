#include "ccg/combinators.hpp"

namespace ccg {

std::string Rule::name() const
{
    switch (kind) {
    case Kind::Lex:
        return "lex";
    case Kind::Init:
        return "init";
    case Kind::Eop:
        return "eop";
    case Kind::Forward:
        return ">" + std::to_string(degree);
    case Kind::Backward:
        return "<" + std::to_string(degree) + (crossing ? "x" : "");
    }
    return "?";
}

ConstPtr make_leaf(CatPtr cat, Rule rule, std::string word, TermList terms)
{
    auto c = std::make_shared<Constituent>();
    c->cat = std::move(cat);
    c->rule = rule;
    c->word = std::move(word);
    c->terms = std::move(terms);
    return c;
}

ConstPtr make_node(CatPtr cat, Rule rule, ConstPtr left, ConstPtr right, TermList delta)
{
    auto c = std::make_shared<Constituent>();
    c->cat = std::move(cat);
    c->rule = rule;
    c->left = std::move(left);
    c->right = std::move(right);
    c->terms = std::move(delta);
    return c;
}

ConstPtr apply(const Substitution& s, const ConstPtr& c)
{
    if (s.empty())
        return c;
    auto out = std::make_shared<Constituent>(*c);
    out->cat = s.apply(c->cat);
    out->terms = apply(s, c->terms);
    if (c->left)
        out->left = apply(s, c->left);
    if (c->right)
        out->right = apply(s, c->right);
    return out;
}

namespace {

void collect_terms(const ConstPtr& c, TermList& out)
{
    if (c->left)
        collect_terms(c->left, out);
    if (c->right)
        collect_terms(c->right, out);
    out.insert(out.end(), c->terms.begin(), c->terms.end());
}

}  // namespace

TermList constituent_terms(const ConstPtr& c)
{
    TermList out;
    collect_terms(c, out);
    return out;
}

std::size_t leaf_count(const ConstPtr& c)
{
    if (c->is_leaf())
        return 1;
    return leaf_count(c->left) + (c->right ? leaf_count(c->right) : 0);
}

std::vector<RuleMatch> applicable_rules(const CatPtr& left, const CatPtr& right)
{
    std::vector<RuleMatch> out;

    if (left->is_forward()) {
        // >n: A/B  B/Z1../Zn  ->  A/Z1../Zn
        for (int n = 0; n <= kMaxComposition; ++n) {
            auto p = peel(right, static_cast<std::size_t>(n));
            if (!p)
                break;
            bool all_forward = true;
            for (const auto& a : p->args)
                all_forward = all_forward && a.first == Slash::Forward;
            if (!all_forward)
                continue;
            Substitution s;
            if (!s.unify(left->arg, p->core))
                continue;
            CatPtr result = s.apply(rebuild(left->result, p->args));
            out.push_back({Rule::forward(n), std::move(s), std::move(result), {}});
        }
        // <1x: A/B  C\A  ->  C/B, recording h_shifted(B, A). A zero morpheme
        // is not material that can be shifted over.
        bool eop_arg = left->arg->is_basic() && left->arg->head == Head::eop;
        if (right->is_backward() && !eop_arg) {
            Substitution s;
            if (s.unify(right->arg, left->result)) {
                CatPtr result = s.apply(fwd(right->result, left->arg));
                TermList delta;
                auto x = head_index(s.apply(left->arg));
                auto y = head_index(s.apply(left->result));
                if (x && y)
                    delta.push_back(make_term("h_shifted", {*x, *y}));
                out.push_back({Rule::backward(1, true), std::move(s), std::move(result), std::move(delta)});
            }
        }
    }

    // <0: B  A\B  ->  A
    if (right->is_backward()) {
        Substitution s;
        if (s.unify(right->arg, left)) {
            CatPtr result = s.apply(right->result);
            out.push_back({Rule::backward(0), std::move(s), std::move(result), {}});
        }
    }
    return out;
}

ConstPtr combine(const ConstPtr& left, const ConstPtr& right, const RuleMatch& m)
{
    return make_node(m.result, m.rule, apply(m.unifier, left), apply(m.unifier, right), m.delta);
}

bool is_obligatory(const Rule& rule, const CatPtr& left)
{
    if (rule.kind != Rule::Kind::Forward)
        return true;
    if (!left->is_forward())
        return true;
    const CatPtr& arg = left->arg;
    if (!arg->is_forward())
        return true;
    return !(arg->arg->is_basic() && arg->arg->head == Head::np);
}

CatPtr apply_structural(const Rule& rule, const CatPtr& left, const CatPtr& right)
{
    if (rule.kind == Rule::Kind::Forward) {
        if (!left->is_forward())
            return nullptr;
        auto p = peel(right, static_cast<std::size_t>(rule.degree));
        if (!p || !structurally_equal(p->core, left->arg))
            return nullptr;
        return rebuild(left->result, p->args);
    }
    if (rule.kind == Rule::Kind::Backward) {
        if (!right->is_backward())
            return nullptr;
        auto p = peel(left, static_cast<std::size_t>(rule.degree));
        if (!p || !structurally_equal(p->core, right->arg))
            return nullptr;
        return rebuild(right->result, p->args);
    }
    return nullptr;
}

}  // namespace ccg
