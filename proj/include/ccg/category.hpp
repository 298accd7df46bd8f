#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ccg/value.hpp"

namespace ccg {

enum class Head : std::uint8_t { n, np, s, part, pp, eop, tls };
enum class Slash : std::uint8_t { Forward, Backward };

std::string_view head_name(Head h);
std::optional<Head> head_from_name(std::string_view s);
std::size_t head_arity(Head h);

struct Category;
using CatPtr = std::shared_ptr<const Category>;

struct Category {
    enum class Kind : std::uint8_t { Basic, Functor, Var };
    Kind kind = Kind::Basic;

    // Basic
    Head head = Head::s;
    std::vector<Value> features;
    Value index;

    // Functor
    CatPtr result;
    Slash slash = Slash::Forward;
    CatPtr arg;

    // Category variable
    VarId var = 0;

    bool is_basic() const { return kind == Kind::Basic; }
    bool is_functor() const { return kind == Kind::Functor; }
    bool is_var() const { return kind == Kind::Var; }
    bool is_forward() const { return is_functor() && slash == Slash::Forward; }
    bool is_backward() const { return is_functor() && slash == Slash::Backward; }
};

CatPtr make_basic(Head h, std::vector<Value> features, Value index);
CatPtr make_functor(CatPtr result, Slash slash, CatPtr arg);
CatPtr make_catvar(VarId v);
CatPtr fwd(CatPtr result, CatPtr arg);
CatPtr bwd(CatPtr result, CatPtr arg);

bool structurally_equal(const CatPtr& a, const CatPtr& b);

// Outermost arguments of a category, outermost first, and the remaining core.
struct Peeled {
    CatPtr core;
    std::vector<std::pair<Slash, CatPtr>> args;  // outermost first
};
// Peels exactly k arguments; nullopt if the category has fewer.
std::optional<Peeled> peel(const CatPtr& c, std::size_t k);
// Rebuilds core|args (args given outermost first).
CatPtr rebuild(CatPtr core, const std::vector<std::pair<Slash, CatPtr>>& args);
std::size_t arity(const CatPtr& c);

// Semantic index of the head basic category (following results), if any.
std::optional<Value> head_index(const CatPtr& c);

class Substitution {
public:
    Value walk(const Value& v) const;
    CatPtr walk(const CatPtr& c) const;

    bool unify(const Value& a, const Value& b);
    bool unify(const CatPtr& a, const CatPtr& b);

    Value apply(const Value& v) const;
    CatPtr apply(const CatPtr& c) const;

    bool empty() const { return values_.empty() && cats_.empty(); }
    std::size_t size() const { return values_.size() + cats_.size(); }

    // Binding lookups used for display and tests.
    std::optional<Value> value_binding(VarId v) const;
    std::optional<CatPtr> cat_binding(VarId v) const;

private:
    bool occurs(VarId v, const CatPtr& c) const;
    std::unordered_map<VarId, Value> values_;
    std::unordered_map<VarId, CatPtr> cats_;
};

std::optional<Substitution> unify(const CatPtr& a, const CatPtr& b);

// True iff c = W\W with the two W's unifiable.
bool is_backward_modifier(const CatPtr& c);

// Consistent renaming of variables to fresh ones.
class Renamer {
public:
    Value operator()(const Value& v);
    CatPtr operator()(const CatPtr& c);

private:
    std::unordered_map<VarId, VarId> map_;
};

CatPtr fresh_rename(const CatPtr& c);

// Assigns display names to variables: e1.. for indices, s1.. for features,
// c1.. for category variables, in order of first request.
class Namer {
public:
    std::string name(VarId v);
    std::string value(const Value& v);
    std::string category(const CatPtr& c);

private:
    std::unordered_map<VarId, std::string> names_;
    int counts_[3] = {0, 0, 0};
};

std::string to_string(const CatPtr& c);

// Variable scope shared between a category literal and its term list.
// Uppercase-initial names are variables, `_` is anonymous.
class Scope {
public:
    Value lookup(const std::string& name, VarKind kind);
    CatPtr catvar(const std::string& name);

private:
    std::map<std::string, Value> vars_;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CatPtr parse_category(std::string_view text, Scope& scope);
CatPtr parse_category(std::string_view text);

}  // namespace ccg
