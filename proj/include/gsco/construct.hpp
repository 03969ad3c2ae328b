#pragma once

#include <string>
#include <vector>

#include "gsco/nfa.hpp"
#include "gsco/word_ops.hpp"

namespace gsco {

/// One hub's worth of bridge bookkeeping. `sources` counts the
/// a-transitions feeding the hub, `targets` those the hub re-enters;
/// `edges_added` is always their sum.
struct BridgeEntry {
    Symbol symbol;
    std::string role; // "fwd", "rev" (crossover directions) or "self"
    std::size_t sources = 0;
    std::size_t targets = 0;
    State hub = 0;
    std::size_t edges_added = 0;
};

struct BridgeReport {
    std::vector<BridgeEntry> entries;

    std::size_t total_edges() const;
    std::string to_table() const;
};

struct CrossResult {
    Nfa nfa;
    BridgeReport report;
};

/// One crossover direction only: words u1·a·v2 with u1·a read in M1 and
/// the remainder in M2. Both operands are trimmed internally; per
/// overlap symbol a, one hub state receives (p, a, hub) for every
/// a-transition (p, a, q) of M1 and leaves by (hub, ε, q') for every
/// a-transition (p', a, q') of M2.
Nfa directional_cross_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r);

/// L(result) = GSCO_R(L(M1), L(M2)): the union of both crossover
/// directions. The ALL sentinel resolves to the alphabet intersection.
CrossResult cross_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r);

/// L(result) = GSCO*_R(L(M)). Trims, then adds one hub per overlap
/// symbol with at least one transition: every a-transition (p, a, q)
/// gains companions (p, a, hub) and (hub, ε, q), originals kept.
Nfa saturate(const Nfa& m, const OverlapSet& r,
             BridgeReport* report = nullptr);

/// The two-language closure as an automaton:
/// cross_nfa(saturate(M1), saturate(M2)), optionally unioned with the
/// base M1 ∪ M2 (the closure proper includes the base; the bare
/// composition does not). The report, when requested, covers the outer
/// crossover phase.
Nfa gsco_star_pair_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r,
                       bool include_base = true,
                       BridgeReport* report = nullptr);

/// Generalized splicing GS(L1, L2, R) as an automaton: the same
/// composition with an explicit rule set required; the ALL sentinel is
/// rejected. Defaults to the bare composition without the base.
Nfa gs_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r,
           bool include_base = false, BridgeReport* report = nullptr);

} // namespace gsco
