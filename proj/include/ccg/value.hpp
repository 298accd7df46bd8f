#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace ccg {

// Variable ids carry their kind in the low two bits.
using VarId = std::uint32_t;

enum class VarKind : std::uint8_t { Index = 0, Feature = 1, Category = 2 };

VarId fresh_var(VarKind kind);

inline VarKind kind_of(VarId v) { return static_cast<VarKind>(v & 3u); }

// A feature value or term argument: an atom or a variable, optionally negated.
// Negation is how untensed forms such as s(-T,-,0) are written.
struct Value {
    bool is_var = false;
    bool neg = false;
    std::string atom;
    VarId var = 0;

    static Value make_atom(std::string a, bool negated = false)
    {
        Value v;
        v.atom = std::move(a);
        v.neg = negated;
        return v;
    }
    static Value make_var(VarId id, bool negated = false)
    {
        Value v;
        v.is_var = true;
        v.var = id;
        v.neg = negated;
        return v;
    }
    static Value fresh(VarKind kind) { return make_var(fresh_var(kind)); }

    bool is_index() const { return is_var && kind_of(var) == VarKind::Index; }

    friend bool operator==(const Value& a, const Value& b)
    {
        if (a.is_var != b.is_var || a.neg != b.neg)
            return false;
        return a.is_var ? a.var == b.var : a.atom == b.atom;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
};

}  // namespace ccg
