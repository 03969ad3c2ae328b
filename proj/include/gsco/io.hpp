#pragma once

#include <string>

#include "gsco/nfa.hpp"
#include "gsco/word_ops.hpp"

namespace gsco {

/// Automaton text format, by sections:
///   alphabet: a b
///   states: 3
///   start: 0
///   finals: 2
///   trans:
///   0 a 1
///   1 @eps 2
/// Full-line `#` comments and blank lines are allowed anywhere; `@eps`
/// labels ε-moves. Throws ParseError with a line number on malformed
/// input.
Nfa read_automaton(const std::string& text);

/// Deterministic canonical form: sections in the order above, symbols
/// in alphabet order, transitions sorted by (src, label, dst) with ε
/// first. read_automaton(write_automaton(m)) reproduces m exactly.
std::string write_automaton(const Nfa& m);

/// Word lists: one word per line, `#` comments, blank lines ignored,
/// the empty word spelled `@eps`. A line with whitespace is read as
/// space-separated multi-character symbols, anything else as a run of
/// single-character (UTF-8 code point) symbols.
FiniteLanguage read_word_list(const std::string& text);

std::string write_word_list(const FiniteLanguage& l);

/// Trie-shaped automaton with L(result) = l, over l's alphabet.
Nfa nfa_from_words(const FiniteLanguage& l);

/// Splicing-rule surface form α#β$α'#β' (exactly one `$`, one `#` per
/// side; components may be empty). A bare token with no markers is
/// sugar for x#$x#.
SplicingRule parse_rule(const std::string& text);

/// Rule-set surface form shared by the CLI and the C API: the word
/// `all` for the ALL sentinel, or entries separated by commas and/or
/// newlines, each a bare symbol or an x#$x# rule. Only the x#$x# shape
/// names overlap symbols; anything else is rejected.
OverlapSet parse_rules_text(const std::string& text);

} // namespace gsco
