#include "gsco/regex.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace gsco {

Regex re_empty() { return Regex{RegexKind::kEmpty, {}, {}}; }
Regex re_epsilon() { return Regex{RegexKind::kEpsilon, {}, {}}; }

Regex re_literal(Symbol symbol) {
    validate_symbol(symbol);
    return Regex{RegexKind::kLiteral, std::move(symbol), {}};
}

Regex re_concat(std::vector<Regex> children) {
    return Regex{RegexKind::kConcat, {}, std::move(children)};
}

Regex re_alt(std::vector<Regex> children) {
    return Regex{RegexKind::kAlt, {}, std::move(children)};
}

Regex re_star(Regex child) {
    return Regex{RegexKind::kStar, {}, {std::move(child)}};
}

Regex re_plus(Regex child) {
    return Regex{RegexKind::kPlus, {}, {std::move(child)}};
}

Regex re_optional(Regex child) {
    return Regex{RegexKind::kOptional, {}, {std::move(child)}};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Regex parse() {
        skip_ws();
        if (pos_ == text_.size()) {
            fail("empty regex");
        }
        Regex r = parse_alt();
        skip_ws();
        if (pos_ != text_.size()) {
            char c = text_[pos_];
            if (c == ')') {
                fail("unmatched ')'");
            }
            fail_on_char(c);
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream out;
        out << "regex parse error at position " << pos_ << ": " << what;
        throw ParseError(out.str());
    }

    [[noreturn]] void fail_on_char(char c) const {
        if (c == '#' || c == '$' || c == '@') {
            fail(std::string("reserved character '") + c + "' cannot be a literal");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_atom() {
        skip_ws();
        if (pos_ == text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '~' || c == '(';
    }

    Regex parse_alt() {
        std::vector<Regex> alternatives;
        alternatives.push_back(parse_concat());
        for (;;) {
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] != '|') {
                break;
            }
            ++pos_;
            alternatives.push_back(parse_concat());
        }
        if (alternatives.size() == 1) {
            return std::move(alternatives.front());
        }
        return re_alt(std::move(alternatives));
    }

    Regex parse_concat() {
        std::vector<Regex> parts;
        if (!at_atom()) {
            if (pos_ < text_.size()) {
                char c = text_[pos_];
                if (c == '*' || c == '+' || c == '?') {
                    fail(std::string("dangling '") + c + "' operator");
                }
                if (c != '|' && c != ')') {
                    fail_on_char(c);
                }
            }
            fail("expected an expression");
        }
        while (at_atom()) {
            parts.push_back(parse_postfix());
        }
        if (parts.size() == 1) {
            return std::move(parts.front());
        }
        return re_concat(std::move(parts));
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) {
                break;
            }
            char c = text_[pos_];
            if (c == '*') {
                r = re_star(std::move(r));
            } else if (c == '+') {
                r = re_plus(std::move(r));
            } else if (c == '?') {
                r = re_optional(std::move(r));
            } else {
                break;
            }
            ++pos_;
        }
        return r;
    }

    Regex parse_atom() {
        skip_ws();
        char c = text_[pos_];
        if (c == '~') {
            ++pos_;
            return re_epsilon();
        }
        if (c == '(') {
            ++pos_;
            Regex inner = parse_alt();
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] != ')') {
                fail("missing ')'");
            }
            ++pos_;
            return inner;
        }
        ++pos_;
        return re_literal(Symbol(1, c));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Binding strength, loosest first: alternation, concatenation, postfix
// operators, atoms.
int precedence(const Regex& r) {
    switch (r.kind) {
    case RegexKind::kAlt:
        return 0;
    case RegexKind::kConcat:
        return 1;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOptional:
        return 2;
    default:
        return 3;
    }
}

void print_to(const Regex& r, int required, std::string& out) {
    bool parens = precedence(r) < required;
    if (parens) {
        out += '(';
    }
    switch (r.kind) {
    case RegexKind::kEmpty:
        throw SemanticError("the empty language has no regex surface form");
    case RegexKind::kEpsilon:
        out += '~';
        break;
    case RegexKind::kLiteral:
        out += r.literal;
        break;
    case RegexKind::kConcat:
        if (r.children.empty()) {
            throw SemanticError("childless concatenation has no regex surface form");
        }
        // Concatenation is associative, so a nested concatenation needs
        // no parentheses; reparsing flattens it the same way
        // normalize_regex does.
        for (const Regex& child : r.children) {
            print_to(child, 1, out);
        }
        break;
    case RegexKind::kAlt:
        if (r.children.empty()) {
            throw SemanticError("childless alternation has no regex surface form");
        }
        for (std::size_t i = 0; i < r.children.size(); ++i) {
            if (i > 0) {
                out += '|';
            }
            print_to(r.children[i], 0, out);
        }
        break;
    case RegexKind::kStar:
        print_to(r.children.front(), 3, out);
        out += '*';
        break;
    case RegexKind::kPlus:
        print_to(r.children.front(), 3, out);
        out += '+';
        break;
    case RegexKind::kOptional:
        print_to(r.children.front(), 3, out);
        out += '?';
        break;
    }
    if (parens) {
        out += ')';
    }
}

} // namespace

Regex parse_regex(const std::string& text) {
    return Parser(text).parse();
}

std::string print_regex(const Regex& r) {
    std::string out;
    print_to(r, 0, out);
    return out;
}

Regex normalize_regex(const Regex& r) {
    Regex n = r;
    for (Regex& child : n.children) {
        child = normalize_regex(child);
    }
    if (n.kind == RegexKind::kConcat || n.kind == RegexKind::kAlt) {
        std::vector<Regex> flat;
        for (Regex& child : n.children) {
            if (child.kind == n.kind) {
                for (Regex& grandchild : child.children) {
                    flat.push_back(std::move(grandchild));
                }
            } else {
                flat.push_back(std::move(child));
            }
        }
        if (flat.size() == 1) {
            return std::move(flat.front());
        }
        n.children = std::move(flat);
    }
    return n;
}

namespace {

struct Fragment {
    State start = 0;
    std::vector<State> finals;
};

class NfaBuilder {
public:
    State fresh() { return next_++; }

    void link(State src, const Symbol& label, State dst) {
        transitions_.push_back({src, label, dst});
    }

    Fragment compile(const Regex& r) {
        switch (r.kind) {
        case RegexKind::kEmpty: {
            State s = fresh();
            return {s, {}};
        }
        case RegexKind::kEpsilon: {
            State s = fresh();
            return {s, {s}};
        }
        case RegexKind::kLiteral: {
            State s = fresh();
            State t = fresh();
            link(s, r.literal, t);
            return {s, {t}};
        }
        case RegexKind::kConcat: {
            if (r.children.empty()) {
                State s = fresh();
                return {s, {s}};
            }
            Fragment acc = compile(r.children.front());
            for (std::size_t i = 1; i < r.children.size(); ++i) {
                Fragment next = compile(r.children[i]);
                for (State f : acc.finals) {
                    link(f, kEpsilonLabel, next.start);
                }
                acc.finals = std::move(next.finals);
            }
            return acc;
        }
        case RegexKind::kAlt: {
            State s = fresh();
            Fragment acc{s, {}};
            for (const Regex& child : r.children) {
                Fragment branch = compile(child);
                link(s, kEpsilonLabel, branch.start);
                acc.finals.insert(acc.finals.end(), branch.finals.begin(),
                                  branch.finals.end());
            }
            return acc;
        }
        case RegexKind::kStar: {
            State s = fresh();
            Fragment inner = compile(r.children.front());
            link(s, kEpsilonLabel, inner.start);
            for (State f : inner.finals) {
                link(f, kEpsilonLabel, s);
            }
            return {s, {s}};
        }
        case RegexKind::kPlus: {
            Fragment inner = compile(r.children.front());
            for (State f : inner.finals) {
                link(f, kEpsilonLabel, inner.start);
            }
            return inner;
        }
        case RegexKind::kOptional: {
            State s = fresh();
            Fragment inner = compile(r.children.front());
            link(s, kEpsilonLabel, inner.start);
            inner.finals.push_back(s);
            inner.start = s;
            return inner;
        }
        }
        throw SemanticError("unknown regex node");
    }

    Nfa finish(Fragment whole, Alphabet alphabet) {
        return make_nfa(next_, std::move(alphabet), std::move(transitions_),
                        whole.start, std::move(whole.finals));
    }

private:
    std::vector<Transition> transitions_;
    State next_ = 0;
};

void collect_literals(const Regex& r, std::set<Symbol>& into) {
    if (r.kind == RegexKind::kLiteral) {
        into.insert(r.literal);
    }
    for (const Regex& child : r.children) {
        collect_literals(child, into);
    }
}

} // namespace

Nfa regex_to_nfa(const Regex& r) {
    std::set<Symbol> literals;
    collect_literals(r, literals);
    NfaBuilder builder;
    Fragment whole = builder.compile(r);
    return builder.finish(std::move(whole),
                          Alphabet(literals.begin(), literals.end()));
}

} // namespace gsco
