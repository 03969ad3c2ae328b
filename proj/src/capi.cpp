#include "gsco.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "gsco/construct.hpp"
#include "gsco/dfa.hpp"
#include "gsco/io.hpp"
#include "gsco/regex.hpp"
#include "gsco/word_ops.hpp"

struct gsco_automaton {
    gsco::Nfa nfa;
};

struct gsco_rules {
    gsco::OverlapSet set = gsco::OverlapSet::all();
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
gsco_status wrap(Fn&& fn) {
    try {
        fn();
        return GSCO_OK;
    } catch (const gsco::ParseError& e) {
        t_last_error = e.what();
        return GSCO_PARSE_ERROR;
    } catch (const gsco::SemanticError& e) {
        t_last_error = e.what();
        return GSCO_SEMANTIC_ERROR;
    } catch (const gsco::CapError& e) {
        t_last_error = e.what();
        return GSCO_CAP_EXCEEDED;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GSCO_ERROR;
    }
}

gsco_status require(bool ok, const char* what) {
    if (!ok) {
        t_last_error = what;
        return GSCO_ERROR;
    }
    return GSCO_OK;
}

void emit_report(const gsco::BridgeReport& report, char** report_out) {
    if (report_out != nullptr) {
        *report_out = dup_string(report.to_table());
    }
}

} // namespace

extern "C" {

const char* gsco_last_error(void) { return t_last_error.c_str(); }

void gsco_string_free(char* text) { delete[] text; }

void gsco_automaton_free(gsco_automaton* m) { delete m; }

void gsco_rules_free(gsco_rules* r) { delete r; }

gsco_status gsco_automaton_from_aut_text(const char* text,
                                         gsco_automaton** out) {
    if (gsco_status s = require(text && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = new gsco_automaton{gsco::read_automaton(text)};
    });
}

gsco_status gsco_automaton_from_regex(const char* pattern,
                                      gsco_automaton** out) {
    if (gsco_status s = require(pattern && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = new gsco_automaton{
            gsco::regex_to_nfa(gsco::parse_regex(pattern))};
    });
}

gsco_status gsco_automaton_from_word_list(const char* text,
                                          gsco_automaton** out) {
    if (gsco_status s = require(text && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = new gsco_automaton{
            gsco::nfa_from_words(gsco::read_word_list(text))};
    });
}

gsco_status gsco_rules_parse(const char* text, gsco_rules** out) {
    if (gsco_status s = require(text && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = new gsco_rules{gsco::parse_rules_text(text)};
    });
}

gsco_status gsco_automaton_to_aut_text(const gsco_automaton* m, char** out) {
    if (gsco_status s = require(m && out, "null argument")) {
        return s;
    }
    return wrap([&] { *out = dup_string(gsco::write_automaton(m->nfa)); });
}

gsco_status gsco_cross(const gsco_automaton* m1, const gsco_automaton* m2,
                       const gsco_rules* rules, gsco_automaton** out,
                       char** report_out) {
    if (gsco_status s = require(m1 && m2 && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        gsco::CrossResult r = gsco::cross_nfa(m1->nfa, m2->nfa, rules->set);
        *out = new gsco_automaton{std::move(r.nfa)};
        emit_report(r.report, report_out);
    });
}

gsco_status gsco_saturate(const gsco_automaton* m, const gsco_rules* rules,
                          gsco_automaton** out, char** report_out) {
    if (gsco_status s = require(m && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        gsco::BridgeReport report;
        *out = new gsco_automaton{
            gsco::saturate(m->nfa, rules->set, &report)};
        emit_report(report, report_out);
    });
}

gsco_status gsco_star_pair(const gsco_automaton* m1, const gsco_automaton* m2,
                           const gsco_rules* rules, int include_base,
                           gsco_automaton** out, char** report_out) {
    if (gsco_status s = require(m1 && m2 && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        gsco::BridgeReport report;
        *out = new gsco_automaton{
            gsco::gsco_star_pair_nfa(m1->nfa, m2->nfa, rules->set,
                                     include_base != 0, &report)};
        emit_report(report, report_out);
    });
}

gsco_status gsco_gs(const gsco_automaton* m1, const gsco_automaton* m2,
                    const gsco_rules* rules, int include_base,
                    gsco_automaton** out, char** report_out) {
    if (gsco_status s = require(m1 && m2 && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        gsco::BridgeReport report;
        *out = new gsco_automaton{gsco::gs_nfa(
            m1->nfa, m2->nfa, rules->set, include_base != 0, &report)};
        emit_report(report, report_out);
    });
}

gsco_status gsco_minimize(const gsco_automaton* m, gsco_automaton** out) {
    if (gsco_status s = require(m && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = new gsco_automaton{
            gsco::minimize(gsco::determinize(m->nfa)).to_nfa()};
    });
}

gsco_status gsco_member(const gsco_automaton* m, const char* word,
                        int* is_member) {
    if (gsco_status s = require(m && word && is_member, "null argument")) {
        return s;
    }
    return wrap([&] {
        *is_member = gsco::member(m->nfa, gsco::parse_word(word)) ? 1 : 0;
    });
}

gsco_status gsco_enumerate(const gsco_automaton* m, size_t max_len,
                           char** out) {
    if (gsco_status s = require(m && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = dup_string(
            gsco::write_word_list(gsco::enumerate(m->nfa, max_len)));
    });
}

gsco_status gsco_equivalent(const gsco_automaton* m1,
                            const gsco_automaton* m2, int* equal,
                            char** witness_out) {
    if (gsco_status s = require(m1 && m2 && equal, "null argument")) {
        return s;
    }
    return wrap([&] {
        gsco::EquivalenceResult r =
            gsco::check_equivalent(m1->nfa, m2->nfa);
        *equal = r.equivalent ? 1 : 0;
        if (witness_out != nullptr) {
            *witness_out =
                r.witness ? dup_string(gsco::format_word(*r.witness))
                          : nullptr;
        }
    });
}

gsco_status gsco_oracle_closure(const char* words, const gsco_rules* rules,
                                size_t max_len, char** out) {
    if (gsco_status s = require(words && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = dup_string(gsco::write_word_list(gsco::bounded_closure_u(
            gsco::read_word_list(words), rules->set,
            gsco::closure_config(max_len))));
    });
}

gsco_status gsco_oracle_pair(const char* words1, const char* words2,
                             const gsco_rules* rules, size_t max_len,
                             char** out) {
    if (gsco_status s =
            require(words1 && words2 && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = dup_string(gsco::write_word_list(gsco::bounded_closure_pair(
            gsco::read_word_list(words1), gsco::read_word_list(words2),
            rules->set, gsco::closure_config(max_len))));
    });
}

gsco_status gsco_oracle_gs(const char* words1, const char* words2,
                           const gsco_rules* rules, size_t max_len,
                           char** out) {
    if (gsco_status s =
            require(words1 && words2 && rules && out, "null argument")) {
        return s;
    }
    return wrap([&] {
        *out = dup_string(gsco::write_word_list(gsco::bounded_gs(
            gsco::read_word_list(words1), gsco::read_word_list(words2),
            rules->set, gsco::closure_config(max_len))));
    });
}

} // extern "C"
