#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gsco/errors.hpp"

namespace gsco {

/// A symbol is one printable token. Tokens are usually single characters
/// (the surface syntax only produces those); automaton files may declare
/// longer tokens.
using Symbol = std::string;

/// A word is a finite, possibly empty sequence of symbols.
using Word = std::vector<Symbol>;

using State = std::size_t;

/// Sorted, duplicate-free set of symbols.
using Alphabet = std::vector<Symbol>;

/// Tokens that the file formats claim for themselves and that can never
/// be symbols: `#`, `$`, `@eps`, `~`.
bool is_reserved_token(const Symbol& symbol);

/// Throws SemanticError unless `symbol` is a usable token: nonempty, no
/// whitespace or control characters, not reserved.
void validate_symbol(const Symbol& symbol);

Alphabet make_alphabet(std::vector<Symbol> symbols);
bool alphabet_contains(const Alphabet& alphabet, const Symbol& symbol);
Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);
Alphabet alphabet_intersection(const Alphabet& a, const Alphabet& b);

/// Canonical word order: by length first, then lexicographic.
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const;
};

using WordSet = std::set<Word, LengthLexLess>;

/// A finite set of words together with its alphabet. Words are stored in
/// canonical (length-then-lexicographic) order.
struct FiniteLanguage {
    WordSet words;
    Alphabet alphabet;

    bool contains(const Word& w) const { return words.count(w) != 0; }
    std::size_t size() const { return words.size(); }
};

/// Builds a language whose alphabet is exactly the set of symbols used.
FiniteLanguage make_language(std::vector<Word> words);

/// Builds a language over a declared alphabet; every word must fit it.
FiniteLanguage make_language(std::vector<Word> words, Alphabet alphabet);

std::set<Symbol> symbols_of(const Word& w);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
bool is_factor(const Word& f, const Word& w);

/// Splits UTF-8 text into one token per code point.
std::vector<Symbol> split_utf8(const std::string& text);

/// Text form of a word: `@eps` for the empty word; single-character
/// symbols concatenated; words containing longer tokens are written
/// space-separated.
std::string format_word(const Word& w);

/// Inverse of format_word. Whitespace-separated input is read as tokens,
/// anything else as a run of single-character symbols.
Word parse_word(const std::string& text);

} // namespace gsco
