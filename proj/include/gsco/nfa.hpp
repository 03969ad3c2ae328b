#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "gsco/language.hpp"

namespace gsco {

/// Transition labels are symbols; the empty token stands for an ε-move.
inline const Symbol kEpsilonLabel{};

inline bool is_epsilon(const Symbol& label) { return label.empty(); }

struct Transition {
    State src = 0;
    Symbol label;
    State dst = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton with ε-moves and a single start
/// state. Transitions are kept sorted by (src, label, dst) with ε first,
/// and deduplicated; use make_nfa to establish the invariants.
struct Nfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    std::vector<Transition> transitions;
    State start = 0;
    std::vector<State> finals; // sorted, unique

    bool is_final(State s) const;
};

/// Validates and canonicalizes. Throws SemanticError on an out-of-range
/// state index, a non-ε label outside the alphabet, or a reserved token
/// used as a symbol.
Nfa make_nfa(std::size_t state_count, Alphabet alphabet,
             std::vector<Transition> transitions, State start,
             std::vector<State> finals);

/// Canonical automaton for the empty language: one non-final state, no
/// transitions.
Nfa empty_nfa(Alphabet alphabet = {});

/// w ∈ L(M), by ε-closure simulation. Symbols outside the alphabet make
/// the word a non-member, not an error.
bool member(const Nfa& m, const Word& w);

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

/// Exactly { w ∈ L(M) : |w| ≤ max_len }, in canonical order. Throws
/// CapError once more than `cap` words have been collected.
FiniteLanguage enumerate(const Nfa& m, std::size_t max_len,
                         std::size_t cap = kDefaultEnumerationCap);

/// Keeps only states that lie on some accepting path, so state paths
/// coincide with prefixes/factors/suffixes of L(M). An empty language
/// collapses to empty_nfa.
Nfa trim(const Nfa& m);

/// L(M1) ∪ L(M2): fresh start state with ε-moves to both starts.
Nfa union_nfa(const Nfa& m1, const Nfa& m2);

bool is_empty(const Nfa& m);

/// States reachable from `from` through ε-moves only, including `from`
/// itself. Sorted.
std::vector<State> epsilon_closure(const Nfa& m, const std::vector<State>& from);

} // namespace gsco
