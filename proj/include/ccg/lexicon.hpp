#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/term.hpp"

namespace ccg {

enum class PosLabel {
    v, vo, vpr, vi, voi, vc, voc, vop, cn, mn, pn,
    nom_pro, obj_pro, poss_pro, det, part, adj,
    post_vp_adv, post_s_adv, prep, sconj
};

std::optional<PosLabel> pos_from_name(std::string_view s);
std::string_view pos_name(PosLabel p);

struct LexEntry {
    std::string word;
    CatPtr cat;
    TermList terms;
    std::string origin;  // label or "closed"
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LexicalGap : std::runtime_error {
    explicit LexicalGap(const std::string& w) : std::runtime_error("no lexical entry for `" + w + "`"), word(w) {}
    std::string word;
};

// key=value options from a lexicon line, e.g. past=read num=pl pers=3.
using LexOptions = std::map<std::string, std::string>;

// Expands a word and label into lexical entries. Verbs expand into every
// listed inflected form (base, s, past, pp, ing), so entries may carry
// surface words other than `word`.
std::vector<LexEntry> expand_entries(const std::string& word, PosLabel label, const LexOptions& opts = {});

// Wraps an NP-headed category X|args as s(T,+,0):S/(s(T,+,0):S\X)|args.
CatPtr raise_subject(const CatPtr& np_cat);
LexEntry raised(const LexEntry& e);

// Interpolates k category variables into an extraction category, following
// R/eop:S/(s/np) -> R/V1..Vk/eop:S/(s/V1..Vk/np).
CatPtr geach_divide(const CatPtr& cat, int k);

class Lexicon {
public:
    void add(LexEntry e);
    void add_word(const std::string& word, PosLabel label, const LexOptions& opts = {});
    // Closed-class line: category literal, term literal, optional flags
    // (`geach` adds the divided variants, `raise` the subject-raised one).
    void add_closed(const std::string& word, std::string_view category, std::string_view terms,
                    std::string_view flags = {});

    void load_words(const std::string& path);
    void load_closed(const std::string& path);

    bool contains(const std::string& word) const;
    // Entries renamed apart per call. Throws LexicalGap.
    std::vector<LexEntry> lookup(const std::string& word) const;

    // Predicates whose argument at the given position is a clausal complement.
    const std::map<std::string, std::size_t>& clausal_predicates() const { return clausal_; }

    std::size_t size() const;

private:
    std::map<std::string, std::vector<LexEntry>> entries_;
    std::map<std::string, std::size_t> clausal_;
};

LexEntry eop_entry();
LexEntry init_entry();

std::string normalize_word(std::string_view w);

}  // namespace ccg
