#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/combinators.hpp"

namespace ccg {

enum class PenaltyKind : std::uint8_t {
    implausibility,
    underspecified_ref,
    overspecified_ref,
    accom_complex_description,
    new_subject,
    heavy_arg_light_modifier,
    shifted_past_non_given,
};

inline constexpr std::size_t kPenaltyKinds = 7;

inline constexpr std::array<PenaltyKind, kPenaltyKinds> kAllPenalties = {
    PenaltyKind::implausibility,   PenaltyKind::underspecified_ref,        PenaltyKind::overspecified_ref,
    PenaltyKind::accom_complex_description, PenaltyKind::new_subject, PenaltyKind::heavy_arg_light_modifier,
    PenaltyKind::shifted_past_non_given,
};

std::string_view penalty_name(PenaltyKind k);
std::optional<PenaltyKind> penalty_from_name(std::string_view s);

struct TimedPenalty {
    PenaltyKind kind;
    Value index;
    int detected_at = 0;
};

struct Annotation {
    enum class Kind : std::uint8_t { Resolved, Accom };
    Kind kind = Kind::Resolved;
    Value index;
    std::string entity;  // Resolved
    TermList query;      // Accom
};

using Buffer = std::vector<ConstPtr>;

struct ParserState {
    Buffer buffer;
    // Terms recorded ahead of the rule that will produce them (anticipated
    // crossing composition); the rule skips them when it fires.
    TermList pending;
    std::vector<Annotation> annotations;
    std::vector<TimedPenalty> penalties;
    int word_clock = 0;
    // Size of the term list before the current word, for trace output.
    std::size_t prior_terms = 0;

    // Buffer terms in input order, then pending terms.
    TermList terms() const;

    bool has_annotation(const Value& index) const;
    bool has_penalty(PenaltyKind k, const Value& index) const;
    // Adds the penalty unless the (kind, index) pair is already present.
    void add_penalty(PenaltyKind k, const Value& index, int now);
};

// Applies a substitution to the buffer, pending terms, annotations and penalties.
ParserState apply(const Substitution& s, const ParserState& st);

std::string to_string(const Annotation& a, Namer& n);
std::string to_string(const TimedPenalty& p, Namer& n);

// Alpha-invariant key over buffer categories, terms, annotations and penalties.
std::string canonical_key(const ParserState& st);

}  // namespace ccg
