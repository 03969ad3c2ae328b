#include "gsco/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace gsco {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
    std::ostringstream out;
    out << "line " << line << ": " << what;
    throw ParseError(out.str());
}

std::string strip(const std::string& text) {
    const char* ws = " \t\r\n";
    const std::size_t begin = text.find_first_not_of(ws);
    if (begin == std::string::npos) {
        return {};
    }
    return text.substr(begin, text.find_last_not_of(ws) - begin + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        toks.push_back(tok);
    }
    return toks;
}

std::size_t parse_number(const std::string& tok, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail_line(line, "expected a number, got '" + tok + "'");
    }
    return value;
}

} // namespace

Nfa read_automaton(const std::string& text) {
    std::optional<std::size_t> state_count;
    std::optional<State> start;
    std::vector<Symbol> alphabet_syms;
    std::vector<State> finals;
    std::vector<Transition> transitions;
    std::map<std::string, std::size_t> seen_sections;
    bool in_trans = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string stripped = strip(raw);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        std::vector<std::string> toks = tokens_of(stripped);
        const std::string& head = toks.front();
        if (head.back() == ':') {
            const std::string section = head.substr(0, head.size() - 1);
            if (section != "alphabet" && section != "states" &&
                section != "start" && section != "finals" &&
                section != "trans") {
                fail_line(line, "unknown section '" + section + "'");
            }
            if (!seen_sections.emplace(section, line).second) {
                fail_line(line, "duplicate section '" + section + "'");
            }
            in_trans = section == "trans";
            if (in_trans) {
                if (toks.size() != 1) {
                    fail_line(line, "'trans:' takes no values on its own line");
                }
                continue;
            }
            toks.erase(toks.begin());
            if (section == "alphabet") {
                for (const std::string& tok : toks) {
                    try {
                        validate_symbol(tok);
                    } catch (const Error& e) {
                        fail_line(line, e.what());
                    }
                    alphabet_syms.push_back(tok);
                }
            } else if (section == "states") {
                if (toks.size() != 1) {
                    fail_line(line, "'states:' needs exactly one number");
                }
                state_count = parse_number(toks.front(), line);
            } else if (section == "start") {
                if (toks.size() != 1) {
                    fail_line(line, "'start:' needs exactly one state");
                }
                start = parse_number(toks.front(), line);
            } else { // finals
                for (const std::string& tok : toks) {
                    finals.push_back(parse_number(tok, line));
                }
            }
            continue;
        }
        if (!in_trans) {
            fail_line(line, "data line outside the trans section");
        }
        if (toks.size() != 3) {
            fail_line(line, "malformed triple; expected 'src label dst'");
        }
        const State src = parse_number(toks[0], line);
        const State dst = parse_number(toks[2], line);
        Symbol label = toks[1];
        if (label == "@eps") {
            label = kEpsilonLabel;
        }
        transitions.push_back({src, std::move(label), dst});
        if (state_count && (src >= *state_count || dst >= *state_count)) {
            fail_line(line, "state out of range in triple");
        }
        if (!is_epsilon(transitions.back().label) &&
            std::find(alphabet_syms.begin(), alphabet_syms.end(),
                      transitions.back().label) == alphabet_syms.end()) {
            fail_line(line,
                      "undeclared symbol '" + transitions.back().label + "'");
        }
    }

    if (!state_count) {
        throw ParseError("missing 'states:' section");
    }
    if (!start) {
        throw ParseError("missing 'start:' section");
    }
    const std::size_t start_line = seen_sections.count("start") != 0
                                       ? seen_sections.at("start")
                                       : 0;
    if (*start >= *state_count) {
        fail_line(start_line, "start state out of range");
    }
    const std::size_t finals_line = seen_sections.count("finals") != 0
                                        ? seen_sections.at("finals")
                                        : 0;
    for (State f : finals) {
        if (f >= *state_count) {
            fail_line(finals_line, "final state out of range");
        }
    }
    for (const Transition& t : transitions) {
        if (t.src >= *state_count || t.dst >= *state_count) {
            throw ParseError("transition state out of range");
        }
    }
    return make_nfa(*state_count, make_alphabet(std::move(alphabet_syms)),
                    std::move(transitions), *start, std::move(finals));
}

std::string write_automaton(const Nfa& m) {
    std::ostringstream out;
    out << "alphabet:";
    for (const Symbol& s : m.alphabet) {
        out << ' ' << s;
    }
    out << "\nstates: " << m.state_count;
    out << "\nstart: " << m.start;
    out << "\nfinals:";
    for (State f : m.finals) {
        out << ' ' << f;
    }
    out << "\ntrans:\n";
    for (const Transition& t : m.transitions) {
        out << t.src << ' ' << (is_epsilon(t.label) ? "@eps" : t.label) << ' '
            << t.dst << '\n';
    }
    return out.str();
}

FiniteLanguage read_word_list(const std::string& text) {
    std::vector<Word> words;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string stripped = strip(raw);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        try {
            words.push_back(parse_word(stripped));
        } catch (const Error& e) {
            fail_line(line, e.what());
        }
    }
    return make_language(std::move(words));
}

std::string write_word_list(const FiniteLanguage& l) {
    std::string out;
    for (const Word& w : l.words) {
        out += format_word(w);
        out += '\n';
    }
    return out;
}

Nfa nfa_from_words(const FiniteLanguage& l) {
    std::map<std::pair<State, Symbol>, State> children;
    std::vector<Transition> transitions;
    std::vector<State> finals;
    State next_state = 1;
    for (const Word& w : l.words) {
        State at = 0;
        for (const Symbol& s : w) {
            auto [it, inserted] = children.try_emplace({at, s}, next_state);
            if (inserted) {
                transitions.push_back({at, s, next_state});
                ++next_state;
            }
            at = it->second;
        }
        finals.push_back(at);
    }
    return make_nfa(next_state, l.alphabet, std::move(transitions), 0,
                    std::move(finals));
}

SplicingRule parse_rule(const std::string& text) {
    const std::string body = strip(text);
    if (body.empty()) {
        throw ParseError("empty splicing rule");
    }
    const bool has_marker = body.find_first_of("#$") != std::string::npos;
    if (!has_marker) {
        // Bare symbol x, sugar for x#$x#. Reserved tokens (ε spellings
        // among them) surface as SemanticError from validation.
        return crossover_rule(body);
    }
    const std::size_t dollar = body.find('$');
    if (dollar == std::string::npos ||
        body.find('$', dollar + 1) != std::string::npos) {
        throw ParseError("splicing rule needs exactly one '$'");
    }
    auto split_side = [](const std::string& side) {
        const std::size_t hash = side.find('#');
        if (hash == std::string::npos ||
            side.find('#', hash + 1) != std::string::npos) {
            throw ParseError(
                "each side of a splicing rule needs exactly one '#'");
        }
        auto component = [](const std::string& part) -> Word {
            if (part.empty()) {
                return {};
            }
            Word w = split_utf8(part);
            for (const Symbol& s : w) {
                validate_symbol(s);
            }
            return w;
        };
        return std::make_pair(component(side.substr(0, hash)),
                              component(side.substr(hash + 1)));
    };
    try {
        auto [alpha, beta] = split_side(body.substr(0, dollar));
        auto [alpha2, beta2] = split_side(body.substr(dollar + 1));
        return SplicingRule{std::move(alpha), std::move(beta),
                            std::move(alpha2), std::move(beta2)};
    } catch (const SemanticError& e) {
        throw ParseError(std::string("bad rule component: ") + e.what());
    }
}

OverlapSet parse_rules_text(const std::string& text) {
    if (strip(text) == "all") {
        return OverlapSet::all();
    }
    std::vector<Symbol> symbols;
    std::string entry;
    std::istringstream in(text);
    std::string entry_line;
    while (std::getline(in, entry_line)) {
        std::istringstream parts(entry_line);
        while (std::getline(parts, entry, ',')) {
            const std::string body = strip(entry);
            if (body.empty()) {
                continue;
            }
            const SplicingRule rule = parse_rule(body);
            if (rule.alpha.size() != 1 || !rule.beta.empty() ||
                rule.alpha2 != rule.alpha || !rule.beta2.empty()) {
                throw SemanticError("rule '" + rule.to_text() +
                                    "' is not of the x#$x# crossover form");
            }
            symbols.push_back(rule.alpha.front());
        }
    }
    if (symbols.empty()) {
        throw SemanticError("rule set names no overlap symbols");
    }
    return OverlapSet::of(std::move(symbols));
}

} // namespace gsco
