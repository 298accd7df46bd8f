#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccg/combinators.hpp"

namespace ccg {

using Derivation = ConstPtr;

// Node paths are strings over {L,R}, read from the root.
using NodePath = std::string;

struct RewriteStats {
    std::size_t weight = 0;
    std::size_t score = 0;
    std::size_t cost = 0;
};

const Constituent* node_at(const Derivation& d, const NodePath& at);
Derivation replace_at(const Derivation& d, const NodePath& at, Derivation replacement);

bool is_redex(const Constituent& node);

// One rewrite step at `at`: ((a >m b) >n c) -> (a >(m+n-1) (b >n c)) for m >= 1,
// and the mirror ((c <n b) <k a) -> (c <n (b <(k-n+1) a)) for k >= n.
std::optional<Derivation> rewrite_once(const Derivation& d, const NodePath& at);

// Paths of all redexes, preorder.
std::vector<NodePath> redexes(const Derivation& d);

// The closest-to-root step: descend along right children while the left child
// is a leaf, then rotate. nullopt if no rotation is possible along that spine.
std::optional<Derivation> ctr_step(const Derivation& d);

Derivation right_normal_form(const Derivation& d, std::size_t* steps = nullptr);

std::size_t internal_nodes(const Derivation& d);
std::size_t rightmost_leaf_depth(const Derivation& d);
std::size_t weight(const Derivation& d);
std::size_t score(const Derivation& d);
RewriteStats derivation_metrics(const Derivation& d);

// Right spine of the normal form, outermost first.
std::vector<ConstPtr> right_frontier(const Derivation& d);

// All complete derivations over the leaf categories using the parser's rules.
std::vector<Derivation> enumerate_derivations(const std::vector<CatPtr>& leaves);
// Same over lexical leaves, keeping their words and terms.
std::vector<Derivation> enumerate_derivations(const std::vector<ConstPtr>& leaves);

// Bracketed text, e.g. "(John >0 (loves >0 Mary))"; leaves print their word,
// or their category when the word is empty.
std::string bracketed(const Derivation& d);
std::string bracketed(const Derivation& d, Namer& n);

}  // namespace ccg
