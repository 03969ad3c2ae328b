#pragma once

#include <string>
#include <vector>

#include "gsco/nfa.hpp"

namespace gsco {

enum class RegexKind {
    kEmpty,    // the empty language; no surface form
    kEpsilon,  // `~`
    kLiteral,
    kConcat,
    kAlt,
    kStar,
    kPlus,
    kOptional,
};

/// Regular-expression syntax tree. Concatenation and alternation are
/// n-ary; the postfix operators carry exactly one child.
struct Regex {
    RegexKind kind = RegexKind::kEmpty;
    Symbol literal;               // kLiteral only
    std::vector<Regex> children;

    bool operator==(const Regex&) const = default;
};

Regex re_empty();
Regex re_epsilon();
Regex re_literal(Symbol symbol);
Regex re_concat(std::vector<Regex> children);
Regex re_alt(std::vector<Regex> children);
Regex re_star(Regex child);
Regex re_plus(Regex child);
Regex re_optional(Regex child);

/// Surface syntax: juxtaposition concatenates, `|` alternates, postfix
/// `*` `+` `?` stack (`a**` is star(star(a))), parentheses group, `~` is
/// ε, literals are single alphanumeric characters, whitespace is
/// ignored. Throws ParseError with the offending position.
Regex parse_regex(const std::string& text);

/// Renders back to the surface syntax with the minimal parentheses the
/// structure requires. Throws SemanticError on trees with no surface
/// form (kEmpty, or childless concat/alt).
std::string print_regex(const Regex& r);

/// Structural normal form: nested concats/alts of the same kind are
/// flattened and single-child lists collapse to the child, which is the
/// shape the parser produces. parse_regex(print_regex(r)) equals
/// normalize_regex(r) for every printable r.
Regex normalize_regex(const Regex& r);

/// Compositional ε-NFA construction; the state count is linear in the
/// size of the tree. The alphabet is exactly the set of literals used.
Nfa regex_to_nfa(const Regex& r);

} // namespace gsco
