#include "ccg/derivation.hpp"

#include <stdexcept>

namespace ccg {

namespace {

Derivation with_children(const Constituent& n, Derivation left, Derivation right)
{
    return make_node(n.cat, n.rule, std::move(left), std::move(right), n.terms);
}

TermList concat(const TermList& a, const TermList& b)
{
    TermList out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::optional<Derivation> contract(const Constituent& n)
{
    if (n.is_leaf() || !n.right || n.left->is_leaf())
        return std::nullopt;
    const Constituent& l = *n.left;
    if (n.rule.kind == Rule::Kind::Forward && l.rule.kind == Rule::Kind::Forward && l.rule.degree >= 1) {
        // ((a >m b) >n c)  ->  (a >(m+n-1) (b >n c))
        int m = l.rule.degree;
        int k = n.rule.degree;
        Rule inner_rule = Rule::forward(k);
        CatPtr inner_cat = apply_structural(inner_rule, l.right->cat, n.right->cat);
        if (!inner_cat)
            return std::nullopt;
        Rule outer_rule = Rule::forward(m + k - 1);
        CatPtr outer_cat = apply_structural(outer_rule, l.left->cat, inner_cat);
        if (!outer_cat || !structurally_equal(outer_cat, n.cat))
            return std::nullopt;
        auto inner = make_node(inner_cat, inner_rule, l.right, n.right);
        return make_node(n.cat, outer_rule, l.left, inner, concat(l.terms, n.terms));
    }
    if (n.rule.kind == Rule::Kind::Backward && l.rule.kind == Rule::Kind::Backward &&
        n.rule.degree >= l.rule.degree) {
        // ((c <j b) <k a)  ->  (c <j (b <(k-j+1) a))
        int j = l.rule.degree;
        int m = n.rule.degree - j + 1;
        const Derivation& c = l.left;
        const Derivation& b = l.right;
        const Derivation& a = n.right;
        auto peeled = peel(b->cat, static_cast<std::size_t>(m));
        bool crossing = false;
        if (peeled)
            for (std::size_t i = 1; i < peeled->args.size(); ++i)
                crossing = crossing || peeled->args[i].first == Slash::Forward;
        Rule inner_rule = Rule::backward(m, crossing);
        CatPtr inner_cat = apply_structural(inner_rule, b->cat, a->cat);
        if (!inner_cat)
            return std::nullopt;
        Rule outer_rule = l.rule;
        CatPtr outer_cat = apply_structural(outer_rule, c->cat, inner_cat);
        if (!outer_cat || !structurally_equal(outer_cat, n.cat))
            return std::nullopt;
        auto inner = make_node(inner_cat, inner_rule, b, a);
        return make_node(n.cat, outer_rule, c, inner, concat(l.terms, n.terms));
    }
    return std::nullopt;
}

void collect_redexes(const Derivation& d, NodePath& path, std::vector<NodePath>& out)
{
    if (d->is_leaf())
        return;
    if (contract(*d))
        out.push_back(path);
    path.push_back('L');
    collect_redexes(d->left, path, out);
    path.back() = 'R';
    collect_redexes(d->right, path, out);
    path.pop_back();
}

std::optional<Derivation> first_redex_rewrite(const Derivation& d)
{
    if (d->is_leaf())
        return std::nullopt;
    if (auto c = contract(*d))
        return c;
    if (auto l = first_redex_rewrite(d->left))
        return with_children(*d, *l, d->right);
    if (auto r = first_redex_rewrite(d->right))
        return with_children(*d, d->left, *r);
    return std::nullopt;
}

}  // namespace

const Constituent* node_at(const Derivation& d, const NodePath& at)
{
    const Constituent* cur = d.get();
    for (char ch : at) {
        if (cur->is_leaf())
            throw std::invalid_argument("node path leaves the tree: " + at);
        cur = (ch == 'L' ? cur->left : cur->right).get();
    }
    return cur;
}

Derivation replace_at(const Derivation& d, const NodePath& at, Derivation replacement)
{
    if (at.empty())
        return replacement;
    if (d->is_leaf())
        throw std::invalid_argument("node path leaves the tree: " + at);
    NodePath rest = at.substr(1);
    if (at[0] == 'L')
        return with_children(*d, replace_at(d->left, rest, std::move(replacement)), d->right);
    return with_children(*d, d->left, replace_at(d->right, rest, std::move(replacement)));
}

bool is_redex(const Constituent& node) { return contract(node).has_value(); }

std::optional<Derivation> rewrite_once(const Derivation& d, const NodePath& at)
{
    const Constituent* n = node_at(d, at);
    auto c = contract(*n);
    if (!c)
        return std::nullopt;
    return replace_at(d, at, *c);
}

std::vector<NodePath> redexes(const Derivation& d)
{
    std::vector<NodePath> out;
    NodePath path;
    collect_redexes(d, path, out);
    return out;
}

std::optional<Derivation> ctr_step(const Derivation& d)
{
    if (d->is_leaf())
        return std::nullopt;
    if (d->left->is_leaf()) {
        auto r = ctr_step(d->right);
        if (!r)
            return std::nullopt;
        return with_children(*d, d->left, *r);
    }
    return contract(*d);
}

Derivation right_normal_form(const Derivation& d, std::size_t* steps)
{
    Derivation cur = d;
    std::size_t n = 0;
    while (auto next = first_redex_rewrite(cur)) {
        cur = *next;
        ++n;
    }
    if (steps)
        *steps = n;
    return cur;
}

std::size_t internal_nodes(const Derivation& d)
{
    if (d->is_leaf())
        return 0;
    return 1 + internal_nodes(d->left) + internal_nodes(d->right);
}

std::size_t rightmost_leaf_depth(const Derivation& d)
{
    std::size_t depth = 0;
    for (const Constituent* p = d.get(); !p->is_leaf(); p = p->right.get())
        ++depth;
    return depth;
}

std::size_t weight(const Derivation& d) { return internal_nodes(d); }

std::size_t score(const Derivation& d)
{
    if (d->is_leaf())
        return 0;
    return score(d->left) + score(d->right) + weight(d->left);
}

RewriteStats derivation_metrics(const Derivation& d)
{
    return {weight(d), score(d), internal_nodes(d) - rightmost_leaf_depth(d)};
}

std::vector<ConstPtr> right_frontier(const Derivation& d)
{
    std::vector<ConstPtr> out;
    for (Derivation p = right_normal_form(d);; p = p->right) {
        out.push_back(p);
        if (p->is_leaf())
            break;
    }
    return out;
}

std::vector<Derivation> enumerate_derivations(const std::vector<CatPtr>& leaves)
{
    std::vector<ConstPtr> nodes;
    for (const auto& c : leaves)
        nodes.push_back(make_leaf(c, Rule::lex(), "", {}));
    return enumerate_derivations(nodes);
}

std::vector<Derivation> enumerate_derivations(const std::vector<ConstPtr>& leaves)
{
    const std::size_t n = leaves.size();
    if (n == 0)
        return {};
    std::vector<std::vector<std::vector<Derivation>>> cell(n, std::vector<std::vector<Derivation>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Renamer r;
        TermList ts;
        for (const auto& t : leaves[i]->terms)
            ts.push_back(rename(r, TermList{t}).front());
        cell[i][i].push_back(make_leaf(r(leaves[i]->cat), Rule::lex(), leaves[i]->word, std::move(ts)));
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::size_t j = i + len - 1;
            for (std::size_t k = i; k < j; ++k) {
                for (const auto& l : cell[i][k])
                    for (const auto& r : cell[k + 1][j])
                        for (const auto& m : applicable_rules(l->cat, r->cat))
                            cell[i][j].push_back(combine(l, r, m));
            }
        }
    }
    return cell[0][n - 1];
}

std::string bracketed(const Derivation& d, Namer& n)
{
    if (d->is_leaf())
        return d->word.empty() ? n.category(d->cat) : d->word;
    return "(" + bracketed(d->left, n) + " " + d->rule.name() + " " + bracketed(d->right, n) + ")";
}

std::string bracketed(const Derivation& d)
{
    Namer n;
    return bracketed(d, n);
}

}  // namespace ccg
