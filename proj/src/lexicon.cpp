#include "ccg/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ccg {

namespace {

constexpr std::array<std::pair<std::string_view, PosLabel>, 21> kLabels = {{
    {"v", PosLabel::v},
    {"vo", PosLabel::vo},
    {"vpr", PosLabel::vpr},
    {"vi", PosLabel::vi},
    {"voi", PosLabel::voi},
    {"vc", PosLabel::vc},
    {"voc", PosLabel::voc},
    {"vop", PosLabel::vop},
    {"cn", PosLabel::cn},
    {"mn", PosLabel::mn},
    {"pn", PosLabel::pn},
    {"nom_pro", PosLabel::nom_pro},
    {"obj_pro", PosLabel::obj_pro},
    {"poss_pro", PosLabel::poss_pro},
    {"det", PosLabel::det},
    {"part", PosLabel::part},
    {"adj", PosLabel::adj},
    {"post_vp_adv", PosLabel::post_vp_adv},
    {"post_s_adv", PosLabel::post_s_adv},
    {"prep", PosLabel::prep},
    {"sconj", PosLabel::sconj},
}};

std::string opt(const LexOptions& o, const std::string& key, const std::string& fallback)
{
    auto it = o.find(key);
    return it == o.end() ? fallback : it->second;
}

LexEntry entry(const std::string& word, const std::string& cat, const std::string& terms,
               std::string_view origin)
{
    Scope scope;
    LexEntry e;
    e.word = word;
    e.cat = parse_category(cat, scope);
    e.terms = parse_terms(terms, scope);
    e.origin = std::string(origin);
    return e;
}

struct VerbForm {
    std::string key;
    std::string tense;    // feature value in the category
    std::string fin;
    std::string subject;  // np features
    std::string tns;      // second argument of tns/2
};

std::vector<VerbForm> forms_for(const std::string& key)
{
    if (key == "past")
        return {{key, "ed", "+", "_,_", "ed"}};
    if (key == "pp")
        return {{key, "en", "-", "_,_", "en"}};
    if (key == "ing")
        return {{key, "ing", "-", "_,_", "ing"}};
    if (key == "s")
        return {{key, "s", "+", "3,sg", "s"}};
    return {{key, "-T", "-", "_,_", "T"},
            {key, "s", "+", "_,pl", "s"},
            {key, "s", "+", "1,_", "s"},
            {key, "s", "+", "2,_", "s"}};
}

bool is_verb(PosLabel l)
{
    switch (l) {
    case PosLabel::v:
    case PosLabel::vo:
    case PosLabel::vpr:
    case PosLabel::vi:
    case PosLabel::voi:
    case PosLabel::vc:
    case PosLabel::voc:
    case PosLabel::vop:
        return true;
    default:
        return false;
    }
}

void verb_entries(const std::string& word, PosLabel label, const LexOptions& o, std::vector<LexEntry>& out)
{
    const std::string stem = opt(o, "stem", word);
    const std::string name(pos_name(label));
    static const std::array<std::string, 5> keys = {"base", "s", "past", "pp", "ing"};
    for (const auto& key : keys) {
        const std::string surface = opt(o, key, key == "base" ? word : "");
        if (surface.empty())
            continue;
        for (const auto& f : forms_for(key)) {
            const std::string vp = "s(" + f.tense + "," + f.fin + ",0):S\\np(" + f.subject + "):X";
            const std::string tns = "tns(S," + f.tns + ")";
            std::string cat;
            std::string pred;
            switch (label) {
            case PosLabel::v:
                cat = vp;
                pred = stem + "(S,X)";
                break;
            case PosLabel::vo:
                cat = vp + "/np:Y";
                pred = stem + "(S,X,Y)";
                break;
            case PosLabel::vpr:
                cat = vp + "/part(" + opt(o, "part", "up") + "):P";
                pred = stem + "_" + opt(o, "part", "up") + "(S,X)";
                break;
            case PosLabel::vi:
                cat = vp + "/eop:S/(s(to,-,0):Y\\np:X)";
                pred = stem + "(S,X,Y)";
                break;
            case PosLabel::voi:
                cat = vp + "/eop:S/(s(to,-,0):Y\\np:Z)/np:Z";
                pred = stem + "(S,X,Z,Y)";
                break;
            case PosLabel::vc:
                cat = vp + "/eop:S/s(_,+,_):Y";
                pred = stem + "(S,X,Y)";
                break;
            case PosLabel::voc:
                cat = vp + "/eop:S/s(_,+,_):Y/np:Z";
                pred = stem + "(S,X,Z,Y)";
                break;
            case PosLabel::vop:
                cat = vp + "/pp(" + opt(o, "prep", "to") + "):Y/np:Z";
                pred = stem + "(S,X,Z,Y)";
                break;
            default:
                break;
            }
            out.push_back(entry(surface, cat, "[" + pred + ", " + tns + "]", name));
        }
        if (label == PosLabel::vo && key == "pp")
            out.push_back(entry(surface, "n(N):Y\\n(N):Y/(s(T2,F2,0):S\\s(T2,F2,0):S)",
                                "[" + stem + "(S,_,Y), tns(S,en), npmod(Y)]", name));
    }
}

std::string person_term(const LexOptions& o, const std::string& var)
{
    static const std::map<std::string, std::string> names = {
        {"1", "first_pers"}, {"2", "second_pers"}, {"3", "third_pers"}, {"sg", "singular"},
        {"pl", "plural"},    {"masc", "masculine"}, {"fem", "feminine"}, {"neut", "neuter"}};
    auto name = [&](const std::string& v) {
        auto it = names.find(v);
        return it == names.end() ? v : it->second;
    };
    std::string out = name(opt(o, "pers", "3")) + "(" + var + ")";
    for (const char* key : {"gender", "num"}) {
        auto v = opt(o, key, "");
        if (!v.empty())
            out += ", " + name(v) + "(" + var + ")";
    }
    return out;
}

std::string np_features(const LexOptions& o)
{
    auto num = opt(o, "num", "_");
    return opt(o, "pers", "3") + "," + num;
}

}  // namespace

std::optional<PosLabel> pos_from_name(std::string_view s)
{
    for (const auto& [name, label] : kLabels)
        if (name == s)
            return label;
    return std::nullopt;
}

std::string_view pos_name(PosLabel p)
{
    for (const auto& [name, label] : kLabels)
        if (label == p)
            return name;
    return "?";
}

CatPtr raise_subject(const CatPtr& c)
{
    std::vector<std::pair<Slash, CatPtr>> args;
    CatPtr core = c;
    while (core->is_forward()) {
        args.emplace_back(core->slash, core->arg);
        core = core->result;
    }
    if (!core->is_basic() || core->head != Head::np)
        throw ConfigError("cannot raise a category without an np core");
    Value t = Value::fresh(VarKind::Feature);
    Value s = Value::fresh(VarKind::Index);
    auto clause = [&] { return make_basic(Head::s, {t, Value::make_atom("+"), Value::make_atom("0")}, s); };
    CatPtr raised = fwd(clause(), bwd(clause(), core));
    return rebuild(raised, args);
}

LexEntry raised(const LexEntry& e)
{
    LexEntry out = e;
    out.cat = raise_subject(e.cat);
    auto x = head_index(e.cat);
    out.terms.clear();
    if (x)
        out.terms.push_back(make_term("subj", {*x}));
    out.terms.insert(out.terms.end(), e.terms.begin(), e.terms.end());
    return out;
}

CatPtr geach_divide(const CatPtr& cat, int k)
{
    if (k <= 0)
        return cat;
    std::vector<std::pair<Slash, CatPtr>> args;
    CatPtr core = cat;
    while (core->is_forward()) {
        args.emplace_back(core->slash, core->arg);
        core = core->result;
    }
    std::optional<std::size_t> gap;
    for (std::size_t i = 0; i < args.size() && !gap; ++i) {
        const CatPtr& a = args[i].second;
        if (a->is_forward() && a->arg->is_basic() && a->arg->head == Head::np)
            gap = i;
    }
    if (!gap)
        throw ConfigError("geach: no extraction argument in category");
    std::vector<CatPtr> vars;
    for (int i = 0; i < k; ++i)
        vars.push_back(make_catvar(fresh_var(VarKind::Category)));
    for (const auto& v : vars)
        core = fwd(core, v);
    const CatPtr& g = args[*gap].second;
    CatPtr inner = g->result;
    for (const auto& v : vars)
        inner = fwd(inner, v);
    args[*gap].second = fwd(inner, g->arg);
    return rebuild(core, args);
}

std::vector<LexEntry> expand_entries(const std::string& word, PosLabel label, const LexOptions& o)
{
    std::vector<LexEntry> out;
    const std::string name(pos_name(label));
    const std::string pred = opt(o, "pred", word);
    if (is_verb(label)) {
        verb_entries(word, label, o, out);
        return out;
    }
    switch (label) {
    case PosLabel::cn: {
        auto num = opt(o, "num", "sg");
        out.push_back(entry(word, "n(" + num + "):X", "[" + pred + "(X)]", name));
        if (num == "pl") {
            auto bare = entry(word, "np(3,pl):X", "[implicit_quantifier(X), " + pred + "(X)]", name);
            out.push_back(bare);
            out.push_back(raised(bare));
        }
        break;
    }
    case PosLabel::mn: {
        out.push_back(entry(word, "n(sg):X", "[" + pred + "(X)]", name));
        auto bare = entry(word, "np(3,sg):X", "[exist(X), " + pred + "(X)]", name);
        out.push_back(bare);
        out.push_back(raised(bare));
        break;
    }
    case PosLabel::pn: {
        auto np = entry(word, "np(3,sg):X", "[the(X), name_of(X," + normalize_word(word) + "), phrase_closed(X)]",
                        name);
        out.push_back(np);
        out.push_back(raised(np));
        break;
    }
    case PosLabel::nom_pro:
        out.push_back(entry(word, "s(T,F,0):S/(s(T,F,0):S\\np(" + np_features(o) + "):X)",
                            "[subj(X), the(X), " + person_term(o, "X") + ", phrase_closed(X)]", name));
        break;
    case PosLabel::obj_pro:
        out.push_back(entry(word, "np(" + np_features(o) + "):X",
                            "[the(X), " + person_term(o, "X") + ", phrase_closed(X)]", name));
        break;
    case PosLabel::poss_pro: {
        auto det = entry(word, "np(3,N):X/eop:X/n(N):X",
                         "[the(Y), " + person_term(o, "Y") + ", phrase_closed(Y), the(X), of(X,Y)]", name);
        out.push_back(det);
        out.push_back(raised(det));
        break;
    }
    case PosLabel::det: {
        auto num = opt(o, "num", "N");
        auto quant = opt(o, "def", "the") == "indef" ? "exist" : "the";
        auto det = entry(word, "np(3," + num + "):X/eop:X/n(" + num + "):X", std::string("[") + quant + "(X)]", name);
        out.push_back(det);
        out.push_back(raised(det));
        break;
    }
    case PosLabel::part:
        out.push_back(entry(word, "part(" + word + "):X", "[]", name));
        break;
    case PosLabel::adj:
        out.push_back(entry(word, "n(N):X/n(N):X", "[" + pred + "(X)]", name));
        break;
    case PosLabel::post_vp_adv:
        out.push_back(entry(word, "s(T,F,0):S\\np(P,N):X\\(s(T,F,0):S\\np(P,N):X)",
                            "[" + pred + "(S), swa(S)]", name));
        break;
    case PosLabel::post_s_adv:
        out.push_back(entry(word, "s(T,F,0):S\\s(T,F,0):S", "[" + pred + "(S), swa(S)]", name));
        break;
    case PosLabel::prep:
        out.push_back(entry(word, "pp(" + word + "):X/np:X", "[]", name));
        out.push_back(entry(word, "n(N):X\\n(N):X/np:Y", "[" + pred + "(X,Y), npmod(X)]", name));
        out.push_back(entry(word, "s(T,F,0):S\\s(T,F,0):S/np:Y", "[" + pred + "(S,Y)]", name));
        out.push_back(entry(word, "s(T,F,0):S/s(T,F,0):S/np:Y", "[" + pred + "(S,Y)]", name));
        break;
    case PosLabel::sconj:
        out.push_back(entry(word, "s(T,F,0):Y/s(T,F,0):Y/eop:X/s(_,_,0):X", "[" + pred + "(X,Y)]", name));
        out.push_back(entry(word, "s(T,F,0):Y\\s(T,F,0):Y/eop:X/s(_,_,0):X", "[" + pred + "(X,Y)]", name));
        break;
    default:
        break;
    }
    return out;
}

std::string normalize_word(std::string_view w)
{
    std::string out;
    for (char c : w)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

void Lexicon::add(LexEntry e)
{
    e.word = normalize_word(e.word);
    entries_[e.word].push_back(std::move(e));
}

void Lexicon::add_word(const std::string& word, PosLabel label, const LexOptions& opts)
{
    for (auto& e : expand_entries(word, label, opts))
        add(std::move(e));
    const std::string stem = opt(opts, "stem", word);
    if (label == PosLabel::vc)
        clausal_[stem] = 2;
    else if (label == PosLabel::voc)
        clausal_[stem] = 3;
}

void Lexicon::add_closed(const std::string& word, std::string_view category, std::string_view terms,
                         std::string_view flags)
{
    LexEntry e;
    {
        Scope scope;
        e.word = word;
        e.cat = parse_category(category, scope);
        e.terms = parse_terms(terms, scope);
        e.origin = "closed";
    }
    std::istringstream fs{std::string(flags)};
    std::vector<std::string> fl;
    for (std::string f; fs >> f;) {
        for (auto& piece : std::vector<std::string>{f}) {
            std::size_t start = 0;
            while (start <= piece.size()) {
                auto comma = piece.find(',', start);
                auto tok = piece.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!tok.empty())
                    fl.push_back(tok);
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
        }
    }
    add(e);
    for (const auto& f : fl) {
        if (f == "raise") {
            add(raised(e));
        } else if (f == "geach") {
            for (int k = 1; k <= 2; ++k) {
                LexEntry g = e;
                g.cat = geach_divide(e.cat, k);
                add(std::move(g));
            }
        } else {
            throw ConfigError("unknown closed-class flag `" + f + "` for `" + word + "`");
        }
    }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos)
            break;
        start = tab + 1;
    }
    return out;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \r\n");
    return s.substr(b, e - b + 1);
}

template <typename F>
void for_each_line(const std::string& path, F f)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        try {
            f(split_tabs(line));
        } catch (const std::exception& e) {
            throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
        }
    }
}

}  // namespace

void Lexicon::load_words(const std::string& path)
{
    for_each_line(path, [&](const std::vector<std::string>& cols) {
        if (cols.size() < 2)
            throw ConfigError("expected word<TAB>label");
        auto label = pos_from_name(trim(cols[1]));
        if (!label)
            throw ConfigError("unknown label `" + trim(cols[1]) + "`");
        LexOptions opts;
        for (std::size_t i = 2; i < cols.size(); ++i) {
            std::istringstream ss(cols[i]);
            for (std::string kv; ss >> kv;) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw ConfigError("expected key=value, got `" + kv + "`");
                opts[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        }
        add_word(trim(cols[0]), *label, opts);
    });
}

void Lexicon::load_closed(const std::string& path)
{
    for_each_line(path, [&](const std::vector<std::string>& cols) {
        if (cols.size() < 3)
            throw ConfigError("expected word<TAB>category<TAB>terms");
        add_closed(trim(cols[0]), trim(cols[1]), trim(cols[2]), cols.size() > 3 ? trim(cols[3]) : "");
    });
}

bool Lexicon::contains(const std::string& word) const
{
    return entries_.count(normalize_word(word)) > 0;
}

std::vector<LexEntry> Lexicon::lookup(const std::string& word) const
{
    auto it = entries_.find(normalize_word(word));
    if (it == entries_.end())
        throw LexicalGap(word);
    std::vector<LexEntry> out;
    out.reserve(it->second.size());
    for (const auto& e : it->second) {
        Renamer r;
        LexEntry c = e;
        c.cat = r(e.cat);
        c.terms = rename(r, e.terms);
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t Lexicon::size() const
{
    std::size_t n = 0;
    for (const auto& [w, es] : entries_)
        n += es.size();
    return n;
}

LexEntry eop_entry()
{
    Scope scope;
    LexEntry e;
    e.word = "";
    e.cat = parse_category("eop:X", scope);
    e.terms = parse_terms("[phrase_closed(X)]", scope);
    e.origin = "eop";
    return e;
}

LexEntry init_entry()
{
    Scope scope;
    LexEntry e;
    e.word = "";
    e.cat = parse_category("tls(T,+,C):X/eop:X/s(T,+,C):X", scope);
    e.origin = "init";
    return e;
}

}  // namespace ccg
