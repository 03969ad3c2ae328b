#include "gsco/language.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gsco {

bool is_reserved_token(const Symbol& symbol) {
    return symbol == "#" || symbol == "$" || symbol == "@eps" || symbol == "~";
}

void validate_symbol(const Symbol& symbol) {
    if (symbol.empty()) {
        throw SemanticError("symbol must be a nonempty token");
    }
    if (is_reserved_token(symbol)) {
        throw SemanticError("reserved token '" + symbol + "' cannot be used as a symbol");
    }
    for (unsigned char c : symbol) {
        if (c < 0x80 && (std::isspace(c) || std::iscntrl(c))) {
            throw SemanticError("symbol token contains whitespace or control characters");
        }
    }
}

Alphabet make_alphabet(std::vector<Symbol> symbols) {
    for (const Symbol& s : symbols) {
        validate_symbol(s);
    }
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

bool alphabet_contains(const Alphabet& alphabet, const Symbol& symbol) {
    return std::binary_search(alphabet.begin(), alphabet.end(), symbol);
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    Alphabet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Alphabet alphabet_intersection(const Alphabet& a, const Alphabet& b) {
    Alphabet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool LengthLexLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

FiniteLanguage make_language(std::vector<Word> words) {
    std::vector<Symbol> symbols;
    for (const Word& w : words) {
        symbols.insert(symbols.end(), w.begin(), w.end());
    }
    return make_language(std::move(words), make_alphabet(std::move(symbols)));
}

FiniteLanguage make_language(std::vector<Word> words, Alphabet alphabet) {
    FiniteLanguage lang;
    lang.alphabet = std::move(alphabet);
    for (Word& w : words) {
        for (const Symbol& s : w) {
            validate_symbol(s);
            if (!alphabet_contains(lang.alphabet, s)) {
                throw SemanticError("word uses symbol '" + s + "' outside the declared alphabet");
            }
        }
        lang.words.insert(std::move(w));
    }
    return lang;
}

std::set<Symbol> symbols_of(const Word& w) {
    return std::set<Symbol>(w.begin(), w.end());
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
    return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool is_factor(const Word& f, const Word& w) {
    if (f.size() > w.size()) {
        return false;
    }
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::vector<Symbol> split_utf8(const std::string& text) {
    std::vector<Symbol> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t len = 1;
        // lead byte determines the sequence length; malformed bytes fall
        // back to one-byte tokens
        unsigned char c = static_cast<unsigned char>(text[i]);
        if ((c & 0xE0) == 0xC0) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0) len = 4;
        len = std::min(len, text.size() - i);
        out.push_back(text.substr(i, len));
        i += len;
    }
    return out;
}

namespace {

bool single_code_point(const Symbol& s) {
    return split_utf8(s).size() == 1;
}

} // namespace

std::string format_word(const Word& w) {
    if (w.empty()) {
        return "@eps";
    }
    bool compact = std::all_of(w.begin(), w.end(), single_code_point);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) {
            out += ' ';
        }
        out += w[i];
    }
    return out;
}

Word parse_word(const std::string& text) {
    if (text == "@eps") {
        return {};
    }
    if (text.empty()) {
        throw ParseError("empty word text; spell the empty word as @eps");
    }
    if (text.find_first_of(" \t") != std::string::npos) {
        Word w;
        std::istringstream in(text);
        Symbol tok;
        while (in >> tok) {
            validate_symbol(tok);
            w.push_back(tok);
        }
        return w;
    }
    if (text[0] == '@') {
        throw ParseError("word text starting with '@' must be exactly @eps");
    }
    Word w = split_utf8(text);
    for (const Symbol& s : w) {
        validate_symbol(s);
    }
    return w;
}

} // namespace gsco
