#include "ccg/term.hpp"

#include <array>
#include <cctype>

namespace ccg {

SemTerm make_term(std::string pred, std::vector<Value> args)
{
    return SemTerm{std::move(pred), std::move(args)};
}

SemTerm apply(const Substitution& s, const SemTerm& t)
{
    SemTerm out{t.pred, {}};
    out.args.reserve(t.args.size());
    for (const auto& a : t.args)
        out.args.push_back(s.apply(a));
    return out;
}

TermList apply(const Substitution& s, const TermList& ts)
{
    if (s.empty())
        return ts;
    TermList out;
    out.reserve(ts.size());
    for (const auto& t : ts)
        out.push_back(apply(s, t));
    return out;
}

TermList rename(Renamer& r, const TermList& ts)
{
    TermList out;
    out.reserve(ts.size());
    for (const auto& t : ts) {
        SemTerm nt{t.pred, {}};
        for (const auto& a : t.args)
            nt.args.push_back(r(a));
        out.push_back(std::move(nt));
    }
    return out;
}

bool is_nonrestrictive(std::string_view pred)
{
    static constexpr std::array<std::string_view, 8> kNonrestrictive = {
        "the", "phrase_closed", "subj", "npmod", "swa", "wh", "h_shifted", "implicit_quantifier"};
    for (auto p : kNonrestrictive)
        if (p == pred)
            return true;
    return false;
}

std::string to_string(const SemTerm& t, Namer& n)
{
    std::string out = t.pred + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i)
            out += ',';
        out += n.value(t.args[i]);
    }
    return out + ")";
}

std::string to_string(const TermList& ts, Namer& n)
{
    std::string out = "[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(ts[i], n);
    }
    return out + "]";
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, Scope& scope) : text_(text), scope_(scope) {}

    TermList list()
    {
        TermList out;
        if (!peek('[')) {
            out.push_back(term());
            end();
            return out;
        }
        ++pos_;
        if (peek(']')) {
            ++pos_;
            end();
            return out;
        }
        for (;;) {
            out.push_back(term());
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        end();
        return out;
    }

    SemTerm single()
    {
        SemTerm t = term();
        if (peek('.'))
            ++pos_;
        end();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("terms `" + std::string(text_) + "`: " + what);
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

    void end()
    {
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        if (start == pos_)
            fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    SemTerm term()
    {
        SemTerm t;
        t.pred = ident();
        expect('(');
        if (peek(')')) {
            ++pos_;
            return t;
        }
        for (;;) {
            t.args.push_back(arg());
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect(')');
            break;
        }
        return t;
    }

    Value arg()
    {
        std::string tok = ident();
        if (tok == "_" || std::isupper(static_cast<unsigned char>(tok[0])))
            return scope_.lookup(tok, VarKind::Index);
        return Value::make_atom(tok);
    }

    std::string_view text_;
    Scope& scope_;
    std::size_t pos_ = 0;
};

}  // namespace

TermList parse_terms(std::string_view text, Scope& scope) { return TermParser(text, scope).list(); }

SemTerm parse_term(std::string_view text, Scope& scope) { return TermParser(text, scope).single(); }

}  // namespace ccg
