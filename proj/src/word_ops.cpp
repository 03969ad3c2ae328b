#include "gsco/word_ops.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace gsco {

namespace {

constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

std::vector<Word> to_vector(const WordSet& words) {
    return std::vector<Word>(words.begin(), words.end());
}

/// Start indices of every occurrence of x in w. For x = ε these are all
/// cut points 0..|w|.
std::vector<std::size_t> occurrences(const Word& w, const Word& x) {
    std::vector<std::size_t> at;
    if (x.size() > w.size()) {
        return at;
    }
    for (std::size_t i = 0; i + x.size() <= w.size(); ++i) {
        if (std::equal(x.begin(), x.end(), w.begin() + i)) {
            at.push_back(i);
        }
    }
    return at;
}

Word splice_words(const Word& head, std::size_t cut1, const Word& tail,
                  std::size_t cut2) {
    Word z;
    z.reserve(cut1 + (tail.size() - cut2));
    z.insert(z.end(), head.begin(), head.begin() + cut1);
    z.insert(z.end(), tail.begin() + cut2, tail.end());
    return z;
}

/// All crossovers of w1 and w2 at overlap x, inserted into `into`;
/// results longer than len_cap are not built.
void cross_at_into(const Word& w1, const Word& w2, const Word& x,
                   bool both_directions, std::size_t len_cap, WordSet& into) {
    const std::vector<std::size_t> in1 = occurrences(w1, x);
    if (in1.empty()) {
        return;
    }
    const std::vector<std::size_t> in2 = occurrences(w2, x);
    for (std::size_t i : in1) {
        const std::size_t cut1 = i + x.size();
        for (std::size_t j : in2) {
            const std::size_t cut2 = j + x.size();
            if (cut1 + (w2.size() - cut2) <= len_cap) {
                into.insert(splice_words(w1, cut1, w2, cut2));
            }
            if (both_directions && cut2 + (w1.size() - cut1) <= len_cap) {
                into.insert(splice_words(w2, cut2, w1, cut1));
            }
        }
    }
}

void splice_into(const Word& w1, const Word& w2, const SplicingRule& rule,
                 std::size_t len_cap, WordSet& into) {
    Word site1 = rule.alpha;
    site1.insert(site1.end(), rule.beta.begin(), rule.beta.end());
    Word site2 = rule.alpha2;
    site2.insert(site2.end(), rule.beta2.begin(), rule.beta2.end());

    const std::vector<std::size_t> in1 = occurrences(w1, site1);
    if (in1.empty()) {
        return;
    }
    const std::vector<std::size_t> in2 = occurrences(w2, site2);
    for (std::size_t i : in1) {
        const std::size_t cut1 = i + rule.alpha.size();
        for (std::size_t j : in2) {
            const std::size_t cut2 = j + rule.alpha2.size();
            if (cut1 + (w2.size() - cut2) <= len_cap) {
                into.insert(splice_words(w1, cut1, w2, cut2));
            }
            if (cut2 + (w1.size() - cut1) <= len_cap) {
                into.insert(splice_words(w2, cut2, w1, cut1));
            }
        }
    }
}

/// One language-level crossover step over ordered pairs X × Y.
WordSet cross_step(const WordSet& xs, const WordSet& ys, const OverlapSet& r,
                   DirectionMode direction, std::size_t len_cap) {
    WordSet out;
    const bool both = direction == DirectionMode::kTwoGsco;
    for (const Word& w1 : xs) {
        for (const Word& w2 : ys) {
            for (const Symbol& a : r.resolve_pair(w1, w2)) {
                cross_at_into(w1, w2, Word{a}, both, len_cap, out);
            }
        }
    }
    return out;
}

WordSet splice_step(const WordSet& xs, const WordSet& ys,
                    const std::vector<SplicingRule>& rules,
                    std::size_t len_cap) {
    WordSet out;
    for (const Word& w1 : xs) {
        for (const Word& w2 : ys) {
            for (const SplicingRule& rule : rules) {
                splice_into(w1, w2, rule, len_cap, out);
            }
        }
    }
    return out;
}

WordSet capped(const WordSet& words, std::size_t len_cap) {
    WordSet out;
    for (const Word& w : words) {
        if (w.size() <= len_cap) {
            out.insert(w);
        }
    }
    return out;
}

void check_config(const ClosureConfig& cfg) {
    if (cfg.intermediate_cap < cfg.max_len) {
        throw SemanticError("closure intermediate_cap must be at least max_len");
    }
}

FiniteLanguage report(const WordSet& words, std::size_t max_len,
                      Alphabet alphabet) {
    return make_language(to_vector(capped(words, max_len)),
                         std::move(alphabet));
}

[[noreturn]] void throw_iteration_limit(std::size_t limit,
                                        FiniteLanguage partial) {
    std::ostringstream out;
    out << "closure iteration limit of " << limit
        << " rounds exceeded before reaching a fixed point";
    throw IterationLimitError(out.str(), std::move(partial));
}

} // namespace

OverlapSet OverlapSet::of(std::vector<Symbol> symbols) {
    if (symbols.empty()) {
        throw SemanticError("overlap set must contain at least one symbol");
    }
    for (const Symbol& s : symbols) {
        validate_symbol(s);
    }
    OverlapSet r;
    r.all_ = false;
    r.symbols_ = make_alphabet(std::move(symbols));
    return r;
}

const Alphabet& OverlapSet::symbols() const {
    if (all_) {
        throw SemanticError("the ALL overlap set has no explicit symbol list");
    }
    return symbols_;
}

Alphabet OverlapSet::resolve_pair(const Word& w1, const Word& w2) const {
    const std::set<Symbol> s1 = symbols_of(w1);
    const std::set<Symbol> s2 = symbols_of(w2);
    Alphabet common;
    for (const Symbol& a : s1) {
        if (s2.count(a) != 0) {
            common.push_back(a);
        }
    }
    if (all_) {
        return common;
    }
    return alphabet_intersection(symbols_, common);
}

Alphabet OverlapSet::resolve_alphabet(const Alphabet& a) const {
    return all_ ? a : alphabet_intersection(symbols_, a);
}

Alphabet OverlapSet::resolve_alphabets(const Alphabet& a1,
                                       const Alphabet& a2) const {
    return resolve_alphabet(alphabet_intersection(a1, a2));
}

std::string OverlapSet::to_text() const {
    if (all_) {
        return "all";
    }
    std::string out;
    for (const Symbol& s : symbols_) {
        if (!out.empty()) {
            out += ',';
        }
        out += s;
    }
    return out;
}

std::string SplicingRule::to_text() const {
    auto join = [](const Word& w) {
        std::string out;
        for (const Symbol& s : w) {
            out += s;
        }
        return out;
    };
    return join(alpha) + "#" + join(beta) + "$" + join(alpha2) + "#" +
           join(beta2);
}

SplicingRule crossover_rule(const Symbol& x) {
    validate_symbol(x);
    return SplicingRule{{x}, {}, {x}, {}};
}

ClosureConfig closure_config(std::size_t max_len) {
    ClosureConfig cfg;
    cfg.max_len = max_len;
    cfg.intermediate_cap = 3 * max_len;
    return cfg;
}

FiniteLanguage gsco_at(const Word& w1, const Word& w2, const Word& x) {
    if (x.empty()) {
        throw SemanticError("empty overlap forbidden");
    }
    WordSet out;
    cross_at_into(w1, w2, x, /*both_directions=*/true, kNoCap, out);
    return make_language(to_vector(out));
}

FiniteLanguage one_gsco_at(const Word& w1, const Word& w2, const Word& x) {
    if (x.empty()) {
        throw SemanticError("empty overlap forbidden");
    }
    WordSet out;
    cross_at_into(w1, w2, x, /*both_directions=*/false, kNoCap, out);
    return make_language(to_vector(out));
}

WordSet common_factors(const Word& w1, const Word& w2) {
    auto factors = [](const Word& w) {
        WordSet out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t n = 1; i + n <= w.size(); ++n) {
                out.insert(Word(w.begin() + i, w.begin() + i + n));
            }
        }
        return out;
    };
    const WordSet f1 = factors(w1);
    const WordSet f2 = factors(w2);
    WordSet out;
    for (const Word& f : f1) {
        if (f2.count(f) != 0) {
            out.insert(f);
        }
    }
    return out;
}

FiniteLanguage gsco_pair(const Word& w1, const Word& w2, PairMode mode) {
    WordSet out;
    if (mode == PairMode::kSymbols) {
        for (const Symbol& a : OverlapSet::all().resolve_pair(w1, w2)) {
            cross_at_into(w1, w2, Word{a}, true, kNoCap, out);
        }
    } else {
        for (const Word& x : common_factors(w1, w2)) {
            cross_at_into(w1, w2, x, true, kNoCap, out);
        }
    }
    return make_language(to_vector(out));
}

FiniteLanguage splice_pair(const Word& w1, const Word& w2,
                           const SplicingRule& rule) {
    WordSet out;
    splice_into(w1, w2, rule, kNoCap, out);
    return make_language(to_vector(out));
}

FiniteLanguage gsco_lang(const FiniteLanguage& l1, const FiniteLanguage& l2,
                         const OverlapSet& r, DirectionMode direction) {
    WordSet out = cross_step(l1.words, l2.words, r, direction, kNoCap);
    return make_language(to_vector(out),
                         alphabet_union(l1.alphabet, l2.alphabet));
}

FiniteLanguage bounded_closure_u(const FiniteLanguage& l, const OverlapSet& r,
                                 const ClosureConfig& cfg) {
    check_config(cfg);
    WordSet all = capped(l.words, cfg.intermediate_cap);
    WordSet fresh = all;
    std::size_t rounds = 0;
    for (;;) {
        WordSet produced =
            cross_step(fresh, all, r, cfg.direction, cfg.intermediate_cap);
        WordSet more =
            cross_step(all, fresh, r, cfg.direction, cfg.intermediate_cap);
        produced.insert(more.begin(), more.end());

        WordSet next;
        for (const Word& w : produced) {
            if (all.count(w) == 0) {
                next.insert(w);
            }
        }
        if (next.empty()) {
            break;
        }
        if (cfg.max_iter && rounds == *cfg.max_iter) {
            throw_iteration_limit(*cfg.max_iter,
                                  report(all, cfg.max_len, l.alphabet));
        }
        all.insert(next.begin(), next.end());
        fresh = std::move(next);
        ++rounds;
    }
    return report(all, cfg.max_len, l.alphabet);
}

FiniteLanguage bounded_closure_r(const FiniteLanguage& l, const OverlapSet& r,
                                 const ClosureConfig& cfg) {
    check_config(cfg);
    const WordSet base = capped(l.words, cfg.intermediate_cap);
    WordSet iterate = base;
    WordSet accumulated = base;
    std::set<WordSet> seen{base};
    std::size_t rounds = 0;
    for (;;) {
        WordSet next =
            cross_step(iterate, base, r, cfg.direction, cfg.intermediate_cap);
        // The iterate map is deterministic, so a repeated set means the
        // whole orbit repeats and nothing new can appear.
        if (seen.count(next) != 0) {
            break;
        }
        accumulated.insert(next.begin(), next.end());
        if (cfg.max_iter && rounds == *cfg.max_iter) {
            throw_iteration_limit(*cfg.max_iter,
                                  report(accumulated, cfg.max_len, l.alphabet));
        }
        seen.insert(next);
        iterate = std::move(next);
        ++rounds;
    }
    return report(accumulated, cfg.max_len, l.alphabet);
}

FiniteLanguage bounded_closure_pair(const FiniteLanguage& l1,
                                    const FiniteLanguage& l2,
                                    const OverlapSet& r,
                                    const ClosureConfig& cfg) {
    check_config(cfg);
    const Alphabet alphabet = alphabet_union(l1.alphabet, l2.alphabet);
    WordSet a = capped(l1.words, cfg.intermediate_cap);
    WordSet b = capped(l2.words, cfg.intermediate_cap);
    WordSet pair = a;
    pair.insert(b.begin(), b.end());
    std::size_t rounds = 0;
    for (;;) {
        const WordSet crossed =
            cross_step(a, b, r, cfg.direction, cfg.intermediate_cap);

        WordSet next_a =
            cross_step(a, a, r, cfg.direction, cfg.intermediate_cap);
        next_a.insert(a.begin(), a.end());
        WordSet next_b =
            cross_step(b, b, r, cfg.direction, cfg.intermediate_cap);
        next_b.insert(b.begin(), b.end());

        const bool pair_stable =
            std::all_of(crossed.begin(), crossed.end(),
                        [&](const Word& w) { return pair.count(w) != 0; });
        if (pair_stable && next_a == a && next_b == b) {
            break;
        }
        if (cfg.max_iter && rounds == *cfg.max_iter) {
            WordSet partial = pair;
            partial.insert(crossed.begin(), crossed.end());
            throw_iteration_limit(*cfg.max_iter,
                                  report(partial, cfg.max_len, alphabet));
        }
        pair.insert(crossed.begin(), crossed.end());
        a = std::move(next_a);
        b = std::move(next_b);
        ++rounds;
    }
    return report(pair, cfg.max_len, alphabet);
}

FiniteLanguage bounded_gs(const FiniteLanguage& l1, const FiniteLanguage& l2,
                          const OverlapSet& r, const ClosureConfig& cfg) {
    check_config(cfg);
    if (r.is_all()) {
        throw SemanticError(
            "generalized splicing requires an explicit rule set");
    }
    std::vector<SplicingRule> rules;
    for (const Symbol& x : r.symbols()) {
        rules.push_back(crossover_rule(x));
    }
    // The σ_R iteration has the same shape as the pair closure: the
    // operands of each round's splicing are the single-language splice
    // iterates of L1 and L2, not the accumulated set itself.
    const Alphabet alphabet = alphabet_union(l1.alphabet, l2.alphabet);
    WordSet a = capped(l1.words, cfg.intermediate_cap);
    WordSet b = capped(l2.words, cfg.intermediate_cap);
    WordSet all = a;
    all.insert(b.begin(), b.end());
    std::size_t rounds = 0;
    for (;;) {
        const WordSet spliced =
            splice_step(a, b, rules, cfg.intermediate_cap);

        WordSet next_a = splice_step(a, a, rules, cfg.intermediate_cap);
        next_a.insert(a.begin(), a.end());
        WordSet next_b = splice_step(b, b, rules, cfg.intermediate_cap);
        next_b.insert(b.begin(), b.end());

        const bool stable =
            std::all_of(spliced.begin(), spliced.end(),
                        [&](const Word& w) { return all.count(w) != 0; });
        if (stable && next_a == a && next_b == b) {
            break;
        }
        if (cfg.max_iter && rounds == *cfg.max_iter) {
            WordSet partial = all;
            partial.insert(spliced.begin(), spliced.end());
            throw_iteration_limit(*cfg.max_iter,
                                  report(partial, cfg.max_len, alphabet));
        }
        all.insert(spliced.begin(), spliced.end());
        a = std::move(next_a);
        b = std::move(next_b);
        ++rounds;
    }
    return report(all, cfg.max_len, alphabet);
}

bool closure_member_dp(const Word& w, const FiniteLanguage& l,
                       const OverlapSet& r) {
    if (l.contains(w)) {
        return true;
    }
    if (w.empty()) {
        return false;
    }

    WordSet prefixes;
    WordSet factors;
    WordSet suffixes;
    for (const Word& u : l.words) {
        for (std::size_t n = 1; n <= u.size(); ++n) {
            prefixes.insert(Word(u.begin(), u.begin() + n));
            suffixes.insert(Word(u.end() - n, u.end()));
        }
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t n = 1; i + n <= u.size(); ++n) {
                factors.insert(Word(u.begin() + i, u.begin() + i + n));
            }
        }
    }

    auto allowed = [&](const Symbol& a) {
        return r.is_all() || alphabet_contains(r.symbols(), a);
    };

    // reach[p]: w[0..p] can be the stitched prefix x0·a1·…·a with the
    // last boundary at position p.
    const std::size_t n = w.size();
    std::vector<char> reach(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        if (!allowed(w[p])) {
            continue;
        }
        if (prefixes.count(Word(w.begin(), w.begin() + p + 1)) != 0) {
            reach[p] = 1;
        }
        if (!reach[p]) {
            for (std::size_t q = 0; q < p; ++q) {
                if (reach[q] &&
                    factors.count(Word(w.begin() + q, w.begin() + p + 1)) != 0) {
                    reach[p] = 1;
                    break;
                }
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (reach[p] && suffixes.count(Word(w.begin() + p, w.end())) != 0) {
            return true;
        }
    }
    return false;
}

} // namespace gsco
