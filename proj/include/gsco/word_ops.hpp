#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsco/language.hpp"

namespace gsco {

/// The overlap family R: either an explicit, nonempty set of symbols, or
/// the ALL sentinel meaning "every symbol the two operands share". The
/// empty word is never an overlap.
class OverlapSet {
public:
    static OverlapSet all() { return OverlapSet(); }
    static OverlapSet of(std::vector<Symbol> symbols);

    bool is_all() const { return all_; }

    /// Explicit members; throws SemanticError on the ALL sentinel.
    const Alphabet& symbols() const;

    /// Overlap symbols usable for one word pair: the common symbols of
    /// the two words, intersected with the explicit set when present.
    Alphabet resolve_pair(const Word& w1, const Word& w2) const;

    /// Overlap symbols for one language/automaton (self-crossover).
    Alphabet resolve_alphabet(const Alphabet& a) const;

    /// Overlap symbols for a pair of languages/automata.
    Alphabet resolve_alphabets(const Alphabet& a1, const Alphabet& a2) const;

    std::string to_text() const; // "all" or a comma-separated list

private:
    OverlapSet() = default;

    bool all_ = true;
    Alphabet symbols_;
};

/// One splicing rule α#β$α'#β'. Any component may be the empty word.
struct SplicingRule {
    Word alpha;
    Word beta;
    Word alpha2;
    Word beta2;

    std::string to_text() const;
};

/// Builds the rule x#$x# that makes splicing coincide with crossover at x.
SplicingRule crossover_rule(const Symbol& x);

enum class DirectionMode {
    kOneGsco, // each decomposition pair yields u1·x·v2 only
    kTwoGsco, // ... yields both u1·x·v2 and u2·x·v1
};

enum class PairMode { kSymbols, kSubstrings };

/// Bounds for the iterated closures. Words longer than intermediate_cap
/// are discarded while iterating; the reported result keeps only words
/// of length ≤ max_len. Exactness of a bounded run is certified by
/// agreement with closure_member_dp, not assumed.
struct ClosureConfig {
    std::size_t max_len = 0;
    std::size_t intermediate_cap = 0; // must be ≥ max_len
    std::optional<std::size_t> max_iter;
    DirectionMode direction = DirectionMode::kTwoGsco;
};

/// Default configuration: intermediate_cap = 3 × max_len, no iteration
/// limit, two-direction crossover.
ClosureConfig closure_config(std::size_t max_len);

/// Thrown when a closure hits its iteration limit before stabilizing.
/// Carries everything found in the completed rounds.
class IterationLimitError : public CapError {
public:
    IterationLimitError(const std::string& what, FiniteLanguage partial)
        : CapError(what), partial_(std::move(partial)) {}

    const FiniteLanguage& partial() const { return partial_; }

private:
    FiniteLanguage partial_;
};

/// Crossover of two words at overlap x: every decomposition pair
/// w1 = u1·x·v1, w2 = u2·x·v2 contributes u1·x·v2 and u2·x·v1. Empty
/// when x is not a factor of both words. Throws SemanticError on x = ε.
FiniteLanguage gsco_at(const Word& w1, const Word& w2, const Word& x);

/// One-direction variant: only u1·x·v2.
FiniteLanguage one_gsco_at(const Word& w1, const Word& w2, const Word& x);

/// All nonempty common factors of the two words.
WordSet common_factors(const Word& w1, const Word& w2);

/// Crossover of a word pair over a whole overlap family: the union of
/// gsco_at over all common symbols (kSymbols) or all common factors
/// (kSubstrings). The two modes agree.
FiniteLanguage gsco_pair(const Word& w1, const Word& w2, PairMode mode);

/// One splicing step: every pair of decompositions w1 = u·α·β·v,
/// w2 = u'·α'·β'·v' contributes u·α·β'·v' and u'·α'·β·v.
FiniteLanguage splice_pair(const Word& w1, const Word& w2,
                           const SplicingRule& rule);

/// Pairwise crossover lifted to finite languages: the union of
/// per-symbol crossover over all (w1, w2) ∈ L1 × L2, with R resolved
/// per pair.
FiniteLanguage gsco_lang(const FiniteLanguage& l1, const FiniteLanguage& l2,
                         const OverlapSet& r,
                         DirectionMode direction = DirectionMode::kTwoGsco);

/// Unrestricted iterated crossover: S ← S ∪ GSCO(S, S) to a fixed
/// point, bounded by cfg. Throws IterationLimitError when max_iter
/// rounds do not reach the fixed point.
FiniteLanguage bounded_closure_u(const FiniteLanguage& l, const OverlapSet& r,
                                 const ClosureConfig& cfg);

/// Restricted iterated crossover: T ← GSCO(T, L), accumulating every
/// iterate. The iterate sequence need not grow, so the iteration stops
/// when a repeated set (a cycle) appears.
FiniteLanguage bounded_closure_r(const FiniteLanguage& l, const OverlapSet& r,
                                 const ClosureConfig& cfg);

/// Two-language closure: P starts as L1 ∪ L2 and each round adds
/// GSCO(A_i, B_i), where A_i and B_i are the i-th unrestricted
/// single-language iterates of L1 and L2.
FiniteLanguage bounded_closure_pair(const FiniteLanguage& l1,
                                    const FiniteLanguage& l2,
                                    const OverlapSet& r,
                                    const ClosureConfig& cfg);

/// Generalized splicing closure: S starts as L1 ∪ L2 and grows by
/// splicing with the rules { x#$x# : x ∈ R } to a fixed point. Splicing
/// always emits both result words, so cfg.direction is ignored. R must
/// be an explicit symbol set.
FiniteLanguage bounded_gs(const FiniteLanguage& l1, const FiniteLanguage& l2,
                          const OverlapSet& r, const ClosureConfig& cfg);

/// Independent decision procedure for w ∈ GSCO*_R(L): either w ∈ L, or
/// w splits as x0·a1·x1·…·ak·xk (k ≥ 1, ai ∈ R) where x0·a1 is a prefix
/// of an L-word, every ai·xi·a(i+1) is a factor of an L-word, and ak·xk
/// is a suffix of an L-word. Decided by dynamic programming over split
/// positions.
bool closure_member_dp(const Word& w, const FiniteLanguage& l,
                       const OverlapSet& r);

} // namespace gsco
