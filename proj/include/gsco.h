#ifndef GSCO_H
#define GSCO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum gsco_status {
    GSCO_OK = 0,
    GSCO_ERROR = 1,
    GSCO_PARSE_ERROR = 2,
    GSCO_SEMANTIC_ERROR = 3,
    GSCO_CAP_EXCEEDED = 4
} gsco_status;

typedef struct gsco_automaton gsco_automaton;
typedef struct gsco_rules gsco_rules;

/* Message for the calling thread's most recent failure; owned by the
 * library, valid until the thread's next failing call. */
const char* gsco_last_error(void);

/* Every char* handed out by this API is released with gsco_string_free. */
void gsco_string_free(char* text);
void gsco_automaton_free(gsco_automaton* m);
void gsco_rules_free(gsco_rules* r);

/* Constructors from the text surfaces: the .aut section format, the
 * regex syntax, and .words word lists (one word per line, @eps for the
 * empty word). */
gsco_status gsco_automaton_from_aut_text(const char* text,
                                         gsco_automaton** out);
gsco_status gsco_automaton_from_regex(const char* pattern,
                                      gsco_automaton** out);
gsco_status gsco_automaton_from_word_list(const char* text,
                                          gsco_automaton** out);

/* Rule sets: "all", a comma/newline-separated list of symbols, or
 * x#$x# splicing rules. */
gsco_status gsco_rules_parse(const char* text, gsco_rules** out);

/* Canonical .aut text. */
gsco_status gsco_automaton_to_aut_text(const gsco_automaton* m, char** out);

/* Crossover/closure constructions. report_out, when non-NULL, receives
 * a human-readable table of the ε-bridges added. */
gsco_status gsco_cross(const gsco_automaton* m1, const gsco_automaton* m2,
                       const gsco_rules* rules, gsco_automaton** out,
                       char** report_out);
gsco_status gsco_saturate(const gsco_automaton* m, const gsco_rules* rules,
                          gsco_automaton** out, char** report_out);
gsco_status gsco_star_pair(const gsco_automaton* m1, const gsco_automaton* m2,
                           const gsco_rules* rules, int include_base,
                           gsco_automaton** out, char** report_out);
gsco_status gsco_gs(const gsco_automaton* m1, const gsco_automaton* m2,
                    const gsco_rules* rules, int include_base,
                    gsco_automaton** out, char** report_out);

gsco_status gsco_minimize(const gsco_automaton* m, gsco_automaton** out);

/* is_member receives 1 or 0. The word uses the word-list spelling. */
gsco_status gsco_member(const gsco_automaton* m, const char* word,
                        int* is_member);

/* All accepted words of length <= max_len as word-list text. */
gsco_status gsco_enumerate(const gsco_automaton* m, size_t max_len,
                           char** out);

/* equal receives 1 or 0; on 0, witness_out (when non-NULL) receives a
 * shortest distinguishing word, otherwise NULL. */
gsco_status gsco_equivalent(const gsco_automaton* m1,
                            const gsco_automaton* m2, int* equal,
                            char** witness_out);

/* Bounded word-level oracles. Inputs and outputs are word-list text. */
gsco_status gsco_oracle_closure(const char* words, const gsco_rules* rules,
                                size_t max_len, char** out);
gsco_status gsco_oracle_pair(const char* words1, const char* words2,
                             const gsco_rules* rules, size_t max_len,
                             char** out);
gsco_status gsco_oracle_gs(const char* words1, const char* words2,
                           const gsco_rules* rules, size_t max_len,
                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* GSCO_H */
