#pragma once

#include <optional>

#include "gsco/nfa.hpp"

namespace gsco {

/// Deterministic, complete automaton. The transition table has one row
/// per state with one entry per alphabet symbol (in alphabet order), so
/// every (state, symbol) pair has exactly one target. A dead ("sink")
/// state, when the language needs one, is an ordinary non-final state
/// that loops on every symbol.
struct Dfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    std::vector<State> table; // row-major, state_count × alphabet.size()
    State start = 0;
    std::vector<State> finals; // sorted, unique

    State step(State s, std::size_t symbol_index) const {
        return table[s * alphabet.size() + symbol_index];
    }
    bool is_final(State s) const;

    Nfa to_nfa() const;
};

inline constexpr std::size_t kDefaultSubsetCap = 250000;

/// Subset construction. States are numbered in discovery (breadth-first)
/// order, symbols taken in alphabet order, so the result is canonical
/// for a given input. Throws CapError when more than `state_cap` subset
/// states appear.
Dfa determinize(const Nfa& m, std::size_t state_cap = kDefaultSubsetCap);

/// Unique minimal complete DFA for L(D), canonically numbered
/// breadth-first from the start state. Equivalent inputs over the same
/// alphabet minimize to structurally identical automata.
Dfa minimize(const Dfa& d);

struct EquivalenceResult {
    bool equivalent = false;
    /// Shortest distinguishing word (lexicographically least among the
    /// shortest) when not equivalent.
    std::optional<Word> witness;
};

/// Language equality over the union of the two alphabets.
EquivalenceResult check_equivalent(const Nfa& m1, const Nfa& m2,
                                   std::size_t state_cap = kDefaultSubsetCap);

inline bool equivalent(const Nfa& m1, const Nfa& m2) {
    return check_equivalent(m1, m2).equivalent;
}

} // namespace gsco
