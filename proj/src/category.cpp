#include "ccg/category.hpp"

#include <atomic>
#include <cctype>

namespace ccg {

VarId fresh_var(VarKind kind)
{
    static std::atomic<std::uint32_t> counter{1};
    return (counter.fetch_add(1) << 2) | static_cast<std::uint32_t>(kind);
}

namespace {

constexpr std::string_view kHeadNames[] = {"n", "np", "s", "part", "pp", "eop", "tls"};
constexpr std::size_t kHeadArity[] = {1, 2, 3, 1, 1, 0, 3};

}  // namespace

std::string_view head_name(Head h) { return kHeadNames[static_cast<int>(h)]; }

std::optional<Head> head_from_name(std::string_view s)
{
    for (int i = 0; i < 7; ++i)
        if (kHeadNames[i] == s)
            return static_cast<Head>(i);
    return std::nullopt;
}

std::size_t head_arity(Head h) { return kHeadArity[static_cast<int>(h)]; }

CatPtr make_basic(Head h, std::vector<Value> features, Value index)
{
    auto c = std::make_shared<Category>();
    c->kind = Category::Kind::Basic;
    c->head = h;
    c->features = std::move(features);
    c->index = std::move(index);
    return c;
}

CatPtr make_functor(CatPtr result, Slash slash, CatPtr arg)
{
    auto c = std::make_shared<Category>();
    c->kind = Category::Kind::Functor;
    c->result = std::move(result);
    c->slash = slash;
    c->arg = std::move(arg);
    return c;
}

CatPtr make_catvar(VarId v)
{
    auto c = std::make_shared<Category>();
    c->kind = Category::Kind::Var;
    c->var = v;
    return c;
}

CatPtr fwd(CatPtr result, CatPtr arg) { return make_functor(std::move(result), Slash::Forward, std::move(arg)); }
CatPtr bwd(CatPtr result, CatPtr arg) { return make_functor(std::move(result), Slash::Backward, std::move(arg)); }

bool structurally_equal(const CatPtr& a, const CatPtr& b)
{
    if (a == b)
        return true;
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Category::Kind::Basic:
        return a->head == b->head && a->features == b->features && a->index == b->index;
    case Category::Kind::Functor:
        return a->slash == b->slash && structurally_equal(a->result, b->result) &&
               structurally_equal(a->arg, b->arg);
    case Category::Kind::Var:
        return a->var == b->var;
    }
    return false;
}

std::optional<Peeled> peel(const CatPtr& c, std::size_t k)
{
    Peeled p;
    p.core = c;
    for (std::size_t i = 0; i < k; ++i) {
        if (!p.core->is_functor())
            return std::nullopt;
        p.args.emplace_back(p.core->slash, p.core->arg);
        p.core = p.core->result;
    }
    return p;
}

CatPtr rebuild(CatPtr core, const std::vector<std::pair<Slash, CatPtr>>& args)
{
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        core = make_functor(core, it->first, it->second);
    return core;
}

std::size_t arity(const CatPtr& c)
{
    std::size_t k = 0;
    for (const Category* p = c.get(); p->is_functor(); p = p->result.get())
        ++k;
    return k;
}

std::optional<Value> head_index(const CatPtr& c)
{
    const Category* p = c.get();
    while (p->is_functor())
        p = p->result.get();
    if (p->is_basic())
        return p->index;
    return std::nullopt;
}

// ---------------------------------------------------------------- substitution

Value Substitution::walk(const Value& v) const
{
    Value cur = v;
    while (cur.is_var) {
        auto it = values_.find(cur.var);
        if (it == values_.end())
            break;
        bool neg = cur.neg != it->second.neg;
        cur = it->second;
        cur.neg = neg;
    }
    return cur;
}

CatPtr Substitution::walk(const CatPtr& c) const
{
    CatPtr cur = c;
    while (cur->is_var()) {
        auto it = cats_.find(cur->var);
        if (it == cats_.end())
            break;
        cur = it->second;
    }
    return cur;
}

bool Substitution::unify(const Value& a0, const Value& b0)
{
    Value a = walk(a0);
    Value b = walk(b0);
    if (a.is_var && b.is_var && a.var == b.var)
        return a.neg == b.neg;
    if (!a.is_var && b.is_var)
        std::swap(a, b);
    if (a.is_var) {
        Value bound = b;
        bound.neg = b.neg != a.neg;
        values_[a.var] = bound;
        return true;
    }
    return a.atom == b.atom && a.neg == b.neg;
}

bool Substitution::occurs(VarId v, const CatPtr& c0) const
{
    CatPtr c = walk(c0);
    switch (c->kind) {
    case Category::Kind::Var:
        return c->var == v;
    case Category::Kind::Functor:
        return occurs(v, c->result) || occurs(v, c->arg);
    case Category::Kind::Basic:
        return false;
    }
    return false;
}

bool Substitution::unify(const CatPtr& a0, const CatPtr& b0)
{
    CatPtr a = walk(a0);
    CatPtr b = walk(b0);
    if (a == b)
        return true;
    if (!a->is_var() && b->is_var())
        std::swap(a, b);
    if (a->is_var()) {
        if (b->is_var() && b->var == a->var)
            return true;
        if (occurs(a->var, b))
            return false;
        cats_[a->var] = b;
        return true;
    }
    if (a->kind != b->kind)
        return false;
    if (a->is_basic()) {
        if (a->head != b->head || a->features.size() != b->features.size())
            return false;
        for (std::size_t i = 0; i < a->features.size(); ++i)
            if (!unify(a->features[i], b->features[i]))
                return false;
        return unify(a->index, b->index);
    }
    return a->slash == b->slash && unify(a->result, b->result) && unify(a->arg, b->arg);
}

Value Substitution::apply(const Value& v) const { return walk(v); }

CatPtr Substitution::apply(const CatPtr& c0) const
{
    if (empty())
        return c0;
    CatPtr c = walk(c0);
    switch (c->kind) {
    case Category::Kind::Var:
        return c;
    case Category::Kind::Basic: {
        bool changed = false;
        std::vector<Value> fs;
        fs.reserve(c->features.size());
        for (const auto& f : c->features) {
            fs.push_back(walk(f));
            changed = changed || fs.back() != f;
        }
        Value idx = walk(c->index);
        changed = changed || idx != c->index;
        return changed ? make_basic(c->head, std::move(fs), std::move(idx)) : c;
    }
    case Category::Kind::Functor: {
        CatPtr r = apply(c->result);
        CatPtr a = apply(c->arg);
        if (r == c->result && a == c->arg)
            return c;
        return make_functor(std::move(r), c->slash, std::move(a));
    }
    }
    return c;
}

std::optional<Value> Substitution::value_binding(VarId v) const
{
    auto it = values_.find(v);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

std::optional<CatPtr> Substitution::cat_binding(VarId v) const
{
    auto it = cats_.find(v);
    if (it == cats_.end())
        return std::nullopt;
    return it->second;
}

std::optional<Substitution> unify(const CatPtr& a, const CatPtr& b)
{
    Substitution s;
    if (!s.unify(a, b))
        return std::nullopt;
    return s;
}

bool is_backward_modifier(const CatPtr& c)
{
    return c->is_backward() && unify(c->result, c->arg).has_value();
}

// ---------------------------------------------------------------- renaming

Value Renamer::operator()(const Value& v)
{
    if (!v.is_var)
        return v;
    auto [it, inserted] = map_.try_emplace(v.var, 0);
    if (inserted)
        it->second = fresh_var(kind_of(v.var));
    return Value::make_var(it->second, v.neg);
}

CatPtr Renamer::operator()(const CatPtr& c)
{
    switch (c->kind) {
    case Category::Kind::Var: {
        auto [it, inserted] = map_.try_emplace(c->var, 0);
        if (inserted)
            it->second = fresh_var(VarKind::Category);
        return make_catvar(it->second);
    }
    case Category::Kind::Basic: {
        std::vector<Value> fs;
        for (const auto& f : c->features)
            fs.push_back((*this)(f));
        return make_basic(c->head, std::move(fs), (*this)(c->index));
    }
    case Category::Kind::Functor: {
        CatPtr r = (*this)(c->result);
        CatPtr a = (*this)(c->arg);
        return make_functor(std::move(r), c->slash, std::move(a));
    }
    }
    return c;
}

CatPtr fresh_rename(const CatPtr& c)
{
    Renamer r;
    return r(c);
}

// ---------------------------------------------------------------- printing

std::string Namer::name(VarId v)
{
    auto it = names_.find(v);
    if (it != names_.end())
        return it->second;
    static const char prefix[] = {'e', 's', 'c'};
    int k = static_cast<int>(kind_of(v));
    std::string n = prefix[k] + std::to_string(++counts_[k]);
    names_.emplace(v, n);
    return n;
}

std::string Namer::value(const Value& v)
{
    std::string body = v.is_var ? name(v.var) : v.atom;
    return v.neg ? "-" + body : body;
}

std::string Namer::category(const CatPtr& c)
{
    switch (c->kind) {
    case Category::Kind::Var:
        return name(c->var);
    case Category::Kind::Basic: {
        std::string out(head_name(c->head));
        if (!c->features.empty()) {
            out += '(';
            for (std::size_t i = 0; i < c->features.size(); ++i) {
                if (i)
                    out += ',';
                out += value(c->features[i]);
            }
            out += ')';
        }
        out += ':';
        out += value(c->index);
        return out;
    }
    case Category::Kind::Functor: {
        std::string out = category(c->result);
        out += c->slash == Slash::Forward ? '/' : '\\';
        if (c->arg->is_functor())
            out += '(' + category(c->arg) + ')';
        else
            out += category(c->arg);
        return out;
    }
    }
    return {};
}

std::string to_string(const CatPtr& c)
{
    Namer n;
    return n.category(c);
}

// ---------------------------------------------------------------- parsing

Value Scope::lookup(const std::string& name, VarKind kind)
{
    if (name == "_")
        return Value::fresh(kind);
    auto it = vars_.find(name);
    if (it != vars_.end())
        return it->second;
    Value v = Value::fresh(kind);
    vars_.emplace(name, v);
    return v;
}

CatPtr Scope::catvar(const std::string& name)
{
    Value v = lookup(name, VarKind::Category);
    return make_catvar(v.var);
}

namespace {

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class CatParser {
public:
    CatParser(std::string_view text, Scope& scope) : text_(text), scope_(scope) {}

    CatPtr parse()
    {
        CatPtr c = cat();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return c;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("category `" + std::string(text_) + "`: " + what + " at " +
                         std::to_string(pos_));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    CatPtr cat()
    {
        CatPtr left = primary();
        for (;;) {
            if (peek('/')) {
                ++pos_;
                left = fwd(left, primary());
            } else if (peek('\\')) {
                ++pos_;
                left = bwd(left, primary());
            } else {
                return left;
            }
        }
    }

    CatPtr primary()
    {
        if (peek('(')) {
            ++pos_;
            CatPtr c = cat();
            expect(')');
            return c;
        }
        std::string name = ident();
        auto head = head_from_name(name);
        if (!head) {
            if (std::isupper(static_cast<unsigned char>(name[0])))
                return scope_.catvar(name);
            fail("unknown category head `" + name + "`");
        }
        std::vector<Value> feats;
        if (peek('(')) {
            ++pos_;
            for (;;) {
                feats.push_back(feature());
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                expect(')');
                break;
            }
            if (feats.size() != head_arity(*head))
                fail("wrong feature count for " + name);
        } else {
            for (std::size_t i = 0; i < head_arity(*head); ++i)
                feats.push_back(Value::fresh(VarKind::Feature));
        }
        Value index = Value::fresh(VarKind::Index);
        if (peek(':')) {
            ++pos_;
            index = scope_.lookup(ident(), VarKind::Index);
        }
        return make_basic(*head, std::move(feats), std::move(index));
    }

    Value feature()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')')
            ++pos_;
        std::string tok(text_.substr(start, pos_ - start));
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.pop_back();
        if (tok.empty())
            fail("empty feature");
        if (tok == "-" || tok == "+")
            return Value::make_atom(tok);
        bool neg = false;
        if (tok[0] == '-') {
            neg = true;
            tok.erase(0, 1);
        }
        for (char ch : tok)
            if (!ident_char(ch))
                fail("bad feature `" + tok + "`");
        if (tok == "_" || std::isupper(static_cast<unsigned char>(tok[0]))) {
            Value v = scope_.lookup(tok, VarKind::Feature);
            v.neg = neg;
            return v;
        }
        return Value::make_atom(tok, neg);
    }

    std::string_view text_;
    Scope& scope_;
    std::size_t pos_ = 0;
};

}  // namespace

CatPtr parse_category(std::string_view text, Scope& scope) { return CatParser(text, scope).parse(); }

CatPtr parse_category(std::string_view text)
{
    Scope scope;
    return parse_category(text, scope);
}

}  // namespace ccg
