#include "ccg/discourse.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ccg/lexicon.hpp"

namespace ccg {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename F>
void for_each_line(std::string_view text, F f)
{
    std::size_t start = 0;
    std::size_t n = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++n;
        auto b = line.find_first_not_of(" \t\r");
        if (b != std::string_view::npos && line[b] != '#') {
            try {
                f(line.substr(b));
            } catch (const std::exception& e) {
                throw ConfigError("line " + std::to_string(n) + ": " + e.what());
            }
        }
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
}

std::string value_key(const Value& v) { return v.neg ? "-" + v.atom : v.atom; }

class QueryEval {
public:
    QueryEval(const TermList& q, const DiscourseDB& db) : q_(q), db_(db) {}

    void run(std::size_t i, const std::function<void()>& on_solution)
    {
        if (i == q_.size()) {
            on_solution();
            return;
        }
        const SemTerm& t = q_[i];
        for (const auto& a : db_.atoms()) {
            if (a.pred != t.pred || a.args.size() != t.args.size())
                continue;
            std::vector<VarId> bound_here;
            bool ok = true;
            for (std::size_t k = 0; k < t.args.size() && ok; ++k) {
                const Value& v = t.args[k];
                if (!v.is_var) {
                    ok = value_key(v) == a.args[k];
                    continue;
                }
                auto it = binding_.find(v.var);
                if (it != binding_.end()) {
                    ok = it->second == a.args[k];
                } else {
                    binding_.emplace(v.var, a.args[k]);
                    bound_here.push_back(v.var);
                }
            }
            if (ok)
                run(i + 1, on_solution);
            for (VarId b : bound_here)
                binding_.erase(b);
        }
    }

    const std::unordered_map<VarId, std::string>& binding() const { return binding_; }

private:
    const TermList& q_;
    const DiscourseDB& db_;
    std::unordered_map<VarId, std::string> binding_;
};

}  // namespace

void DiscourseDB::add(GroundAtom a) { atoms_.push_back(std::move(a)); }

DiscourseDB DiscourseDB::parse(std::string_view text)
{
    DiscourseDB db;
    for_each_line(text, [&](std::string_view line) {
        Scope scope;
        SemTerm t = parse_term(line, scope);
        GroundAtom a{t.pred, {}};
        for (const auto& v : t.args) {
            if (v.is_var)
                throw ConfigError("discourse atoms must be ground: " + std::string(line));
            a.args.push_back(value_key(v));
        }
        db.add(std::move(a));
    });
    return db;
}

DiscourseDB DiscourseDB::load(const std::string& path)
{
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw ConfigError(path + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void PlausibilityDB::add(std::string_view pattern, std::string explanation)
{
    Scope scope;
    patterns_.push_back({parse_terms(pattern, scope), std::move(explanation)});
}

PlausibilityDB PlausibilityDB::parse(std::string_view text)
{
    PlausibilityDB db;
    for_each_line(text, [&](std::string_view line) {
        std::string explanation;
        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            auto rest = line.substr(hash + 1);
            auto b = rest.find_first_not_of(" \t");
            explanation = b == std::string_view::npos ? "" : std::string(rest.substr(b));
            while (!explanation.empty() && (explanation.back() == '\r' || explanation.back() == ' '))
                explanation.pop_back();
            line = line.substr(0, hash);
        }
        auto e = line.find_last_not_of(" \t\r");
        db.add(line.substr(0, e + 1), std::move(explanation));
    });
    return db;
}

PlausibilityDB PlausibilityDB::load(const std::string& path)
{
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw ConfigError(path + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::set<std::string> eval_query(const TermList& query, const DiscourseDB& db, const Value& x)
{
    std::set<std::string> out;
    if (!x.is_var)
        return out;
    QueryEval ev(query, db);
    ev.run(0, [&] {
        auto it = ev.binding().find(x.var);
        if (it != ev.binding().end())
            out.insert(it->second);
    });
    return out;
}

std::vector<VarId> pattern_variables(const TermList& pattern)
{
    std::vector<VarId> out;
    for (const auto& t : pattern)
        for (const auto& a : t.args)
            if (a.is_var && std::find(out.begin(), out.end(), a.var) == out.end())
                out.push_back(a.var);
    return out;
}

std::vector<std::vector<Value>> match_pattern(const TermList& pattern, const TermList& terms)
{
    const auto vars = pattern_variables(pattern);
    std::vector<std::vector<Value>> out;
    std::map<VarId, Value> binding;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == pattern.size()) {
            std::vector<Value> row;
            for (VarId v : vars)
                row.push_back(binding.at(v));
            out.push_back(std::move(row));
            return;
        }
        const SemTerm& p = pattern[i];
        for (const auto& t : terms) {
            if (t.pred != p.pred || t.args.size() != p.args.size())
                continue;
            std::vector<VarId> bound_here;
            bool ok = true;
            for (std::size_t k = 0; k < p.args.size() && ok; ++k) {
                const Value& pv = p.args[k];
                if (!pv.is_var) {
                    ok = pv == t.args[k];
                    continue;
                }
                auto it = binding.find(pv.var);
                if (it != binding.end()) {
                    ok = it->second == t.args[k];
                } else {
                    binding.emplace(pv.var, t.args[k]);
                    bound_here.push_back(pv.var);
                }
            }
            if (ok)
                go(i + 1);
            for (VarId b : bound_here)
                binding.erase(b);
        }
    };
    go(0);
    return out;
}

}  // namespace ccg
