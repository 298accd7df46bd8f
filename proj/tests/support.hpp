#pragma once

#include <random>
#include <string>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/term.hpp"

namespace ccg::test {

inline std::string show(const CatPtr& c)
{
    Namer n;
    return n.category(c);
}

inline std::string show(const TermList& ts)
{
    Namer n;
    return to_string(ts, n);
}

// Random categories over a small vocabulary, with shared variables drawn from
// a fixed pool so that unification has something to bind.
class RandomCats {
public:
    explicit RandomCats(unsigned seed) : rng_(seed)
    {
        for (int i = 0; i < 3; ++i) {
            index_pool_.push_back(Value::fresh(VarKind::Index));
            feature_pool_.push_back(Value::fresh(VarKind::Feature));
        }
    }

    CatPtr basic()
    {
        static const Head heads[] = {Head::n, Head::np, Head::s, Head::pp};
        Head h = heads[pick(4)];
        std::vector<Value> feats;
        for (std::size_t i = 0; i < head_arity(h); ++i)
            feats.push_back(feature());
        Value idx = coin() ? index_pool_[pick(3)] : Value::fresh(VarKind::Index);
        return make_basic(h, std::move(feats), idx);
    }

    CatPtr category(int depth)
    {
        if (depth == 0 || pick(3) == 0)
            return basic();
        CatPtr r = category(depth - 1);
        CatPtr a = category(depth - 1);
        return coin() ? fwd(r, a) : bwd(r, a);
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin() { return pick(2) == 0; }
    std::mt19937& rng() { return rng_; }

private:
    Value feature()
    {
        static const char* atoms[] = {"sg", "pl", "3", "ed", "+", "0"};
        switch (pick(3)) {
        case 0:
            return Value::make_atom(atoms[pick(6)]);
        case 1:
            return feature_pool_[pick(3)];
        default:
            return Value::fresh(VarKind::Feature);
        }
    }

    std::mt19937 rng_;
    std::vector<Value> index_pool_;
    std::vector<Value> feature_pool_;
};

}  // namespace ccg::test
