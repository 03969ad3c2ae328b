// Acceptance suite: one line per criterion, exit code = number of
// failed criteria. Random corpora use fixed seeds; every comparison is
// against an independent computation (word-level operations, the
// membership DP, the brute-force generators in oracles.hpp, or counts
// recomputed from the raw transition lists).

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gsco/construct.hpp"
#include "gsco/dfa.hpp"
#include "gsco/io.hpp"
#include "gsco/language.hpp"
#include "gsco/nfa.hpp"
#include "gsco/regex.hpp"
#include "gsco/word_ops.hpp"

#include "oracles.hpp"

namespace {

using namespace gsco;

std::vector<std::string> notes;
std::size_t extra_notes = 0;
int failed_criteria = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        return;
    }
    if (notes.size() < 6) {
        notes.push_back(what);
    } else {
        ++extra_notes;
    }
}

void criterion(int n, const std::string& title,
               const std::function<void()>& body) {
    notes.clear();
    extra_notes = 0;
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("unexpected exception: ") + e.what());
    }
    if (notes.empty()) {
        std::cout << "criterion " << n << ": PASS  " << title << '\n';
        return;
    }
    ++failed_criteria;
    std::cout << "criterion " << n << ": FAIL  " << title << '\n';
    for (const std::string& s : notes) {
        std::cout << "    " << s << '\n';
    }
    if (extra_notes != 0) {
        std::cout << "    ... and " << extra_notes << " more\n";
    }
}

Word W(const std::string& s) { return oracle::to_word(s); }

FiniteLanguage lang(std::initializer_list<const char*> words) {
    std::vector<Word> out;
    for (const char* w : words) {
        out.push_back(W(w));
    }
    return make_language(std::move(out));
}

Nfa from_re(const std::string& text) {
    return regex_to_nfa(parse_regex(text));
}

OverlapSet ov(const std::string& symbols) {
    std::vector<Symbol> out;
    for (char c : symbols) {
        out.emplace_back(1, c);
    }
    return OverlapSet::of(std::move(out));
}

WordSet slice(const WordSet& words, std::size_t max_len) {
    WordSet out;
    for (const Word& w : words) {
        if (w.size() <= max_len) {
            out.insert(w);
        }
    }
    return out;
}

FiniteLanguage truncated(const FiniteLanguage& l, std::size_t max_len) {
    std::vector<Word> kept;
    for (const Word& w : l.words) {
        if (w.size() <= max_len) {
            kept.push_back(w);
        }
    }
    return make_language(std::move(kept), l.alphabet);
}

ClosureConfig cfg(std::size_t max_len, std::size_t icap) {
    return {max_len, icap, std::nullopt, DirectionMode::kTwoGsco};
}

FiniteLanguage anbn() {
    return lang({"ab", "aabb", "aaabbb", "aaaabbbb"});
}

bool same_dfa(const Dfa& a, const Dfa& b) {
    return a.state_count == b.state_count && a.alphabet == b.alphabet &&
           a.table == b.table && a.start == b.start && a.finals == b.finals;
}

/// { w ∈ GSCO_R(L1, L2) : |w| ≤ max_len }, computed word by word without
/// ever materializing a product longer than the bound. Matches the
/// unbounded gsco_lang sliced to max_len.
WordSet gsco_slice(const FiniteLanguage& l1, const FiniteLanguage& l2,
                   const OverlapSet& r, std::size_t max_len) {
    WordSet out;
    for (const Word& w1 : l1.words) {
        for (const Word& w2 : l2.words) {
            for (const Symbol& x : r.resolve_pair(w1, w2)) {
                for (std::size_t i = 0; i < w1.size(); ++i) {
                    if (w1[i] != x) {
                        continue;
                    }
                    for (std::size_t j = 0; j < w2.size(); ++j) {
                        if (w2[j] != x) {
                            continue;
                        }
                        if (i + (w2.size() - j) <= max_len) {
                            Word w(w1.begin(), w1.begin() + i + 1);
                            w.insert(w.end(), w2.begin() + j + 1, w2.end());
                            out.insert(std::move(w));
                        }
                        if (j + (w1.size() - i) <= max_len) {
                            Word w(w2.begin(), w2.begin() + j + 1);
                            w.insert(w.end(), w1.begin() + i + 1, w1.end());
                            out.insert(std::move(w));
                        }
                    }
                }
            }
        }
    }
    return out;
}

OverlapSet sample_rules(std::mt19937& rng, int alphabet_size) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> sym(0, alphabet_size - 1);
    const int k = kind(rng);
    if (k == 0) {
        return OverlapSet::all();
    }
    std::vector<Symbol> symbols;
    symbols.emplace_back(1, static_cast<char>('a' + sym(rng)));
    if (k == 2) {
        symbols.emplace_back(1, static_cast<char>('a' + sym(rng)));
    }
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return OverlapSet::of(std::move(symbols));
}

/// Shared corpus: hand-picked automata spanning finite, infinite, empty
/// and ε-containing languages, plus random trimmed machines.
std::vector<Nfa> corpus() {
    std::vector<Nfa> out;
    out.push_back(nfa_from_words(lang({"ab", "ba"})));
    out.push_back(nfa_from_words(lang({"ab"})));
    out.push_back(nfa_from_words(anbn()));
    out.push_back(nfa_from_words(make_language({Word{}})));
    out.push_back(empty_nfa({"a"}));
    out.push_back(from_re("a*b"));
    out.push_back(from_re("(a|b)*"));
    out.push_back(from_re("ab|ba"));
    out.push_back(from_re("(ab)*"));
    out.push_back(from_re("a+b?"));
    std::mt19937 rng(4242);
    for (int i = 0; i < 6; ++i) {
        out.push_back(oracle::random_trim_nfa(rng, 4, 2));
    }
    return out;
}

// --- criterion 1 -----------------------------------------------------

// One-step crossover automata vs the word-level operation. Operands are
// trimmed and have at most 5 states, so any word of the crossover with
// length ≤ 8 arises from operand words of length ≤ 8 + 4: comparing
// against truncations of depth 12 is exact, and depth 13 double-checks
// that the slice has stabilized.
void criterion_one_step() {
    expect(enumerate(cross_nfa(nfa_from_words(lang({"ab"})),
                               nfa_from_words(lang({"ba"})),
                               OverlapSet::all())
                         .nfa,
                     3)
                   .words == lang({"a", "b", "aba", "bab"}).words,
           "worked example {ab} x {ba} does not give {a, b, aba, bab}");
    expect(equivalent(
               cross_nfa(from_re("a*b"), from_re("ba*"), ov("a")).nfa,
               from_re("aa*|baa*b")),
           "worked example a*b x ba* at {a} is not aa*|baa*b");

    std::mt19937 rng(8231);
    int accepted = 0;
    int attempts = 0;
    int tied = 0;
    while (accepted < 50 && attempts < 30000) {
        ++attempts;
        std::uniform_int_distribution<int> asz_d(1, 3);
        const int asz = asz_d(rng);
        const Nfa m1 = oracle::random_trim_nfa(rng, 5, asz);
        const Nfa m2 = oracle::random_trim_nfa(rng, 5, asz);
        FiniteLanguage f1;
        FiniteLanguage f2;
        try {
            f1 = enumerate(m1, 13, 150);
            f2 = enumerate(m2, 13, 150);
        } catch (const CapError&) {
            continue; // too many short words; draw another pair
        }
        const OverlapSet r = sample_rules(rng, asz);
        ++accepted;
        const std::string tag = "pair " + std::to_string(accepted);
        const WordSet deep = gsco_slice(f1, f2, r, 8);
        const WordSet exact =
            gsco_slice(truncated(f1, 12), truncated(f2, 12), r, 8);
        const WordSet got = enumerate(cross_nfa(m1, m2, r).nfa, 8).words;
        expect(got == exact, tag + ": automaton slice differs from the "
                                   "word-level crossover");
        expect(deep == exact,
               tag + ": slice changed when the truncation deepened");
        if (f1.size() <= 40 && f2.size() <= 40) {
            ++tied;
            expect(slice(gsco_lang(f1, f2, r).words, 8) == deep,
                   tag + ": gsco_lang disagrees with the sliced oracle");
        }
    }
    expect(accepted == 50, "sampled only " + std::to_string(accepted) +
                               " of 50 automaton pairs");
    expect(tied >= 10, "only " + std::to_string(tied) +
                           " pairs were small enough for the direct "
                           "gsco_lang comparison");
}

// --- criterion 2 -----------------------------------------------------

void criterion_closure() {
    // The closure of {ab, ba}: exactly the nonempty alternating words,
    // two per length.
    const FiniteLanguage two = lang({"ab", "ba"});
    const Nfa sat_two = saturate(nfa_from_words(two), OverlapSet::all());
    const WordSet en8 = enumerate(sat_two, 8).words;
    expect(en8.size() == 16, "closure of {ab, ba} has " +
                                 std::to_string(en8.size()) +
                                 " words of length <= 8, not 16");
    std::map<std::size_t, int> per_length;
    bool repeats = false;
    for (const Word& w : en8) {
        ++per_length[w.size()];
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            repeats = repeats || w[i] == w[i + 1];
        }
    }
    expect(!repeats, "a closure word of {ab, ba} has an aa or bb factor");
    for (std::size_t n = 1; n <= 8; ++n) {
        expect(per_length[n] == 2,
               "length " + std::to_string(n) + " has " +
                   std::to_string(per_length[n]) + " closure words, not 2");
    }

    std::mt19937 rng(9172);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 30 && attempts < 4000) {
        ++attempts;
        std::uniform_int_distribution<int> asz_d(2, 3);
        const int asz = asz_d(rng);
        const FiniteLanguage l =
            oracle::to_language(oracle::random_language(rng, asz, 5, 4));
        const OverlapSet r =
            (attempts % 2 == 0) ? OverlapSet::all() : ov("a");
        const Nfa sat = saturate(nfa_from_words(l), r);
        FiniteLanguage en9;
        try {
            en9 = enumerate(sat, 9, 80);
        } catch (const CapError&) {
            continue; // closure too dense for the word-level comparison
        }
        ++accepted;
        const std::string tag = "language " + std::to_string(accepted);
        // Word lengths are ≤ 4, so intermediate cap 9 makes the ≤ 6
        // slice of the bounded closure exact.
        expect(bounded_closure_u(l, r, cfg(6, 9)).words ==
                   slice(en9.words, 6),
               tag + ": bounded closure differs from the automaton");
        bool agree = true;
        for (const std::string& s : oracle::all_strings(asz, 8, true)) {
            const Word w = oracle::to_word(s);
            if (closure_member_dp(w, l, r) != member(sat, w)) {
                agree = false;
                break;
            }
        }
        expect(agree, tag + ": membership DP disagrees with the "
                            "saturated automaton");
    }
    expect(accepted == 30, "sampled only " + std::to_string(accepted) +
                               " of 30 closure languages");
}

// --- criterion 3 -----------------------------------------------------

void criterion_idempotence() {
    int index = 0;
    for (const Nfa& m : corpus()) {
        ++index;
        for (const OverlapSet& r : {OverlapSet::all(), ov("a")}) {
            const std::string tag = "corpus automaton " +
                                    std::to_string(index) + ", rules " +
                                    r.to_text();
            const Nfa s = saturate(m, r);
            expect(equivalent(saturate(s, r), s),
                   tag + ": saturation is not idempotent");
            expect(equivalent(union_nfa(cross_nfa(s, s, r).nfa, s), s),
                   tag + ": saturation is not crossover-closed");
        }
    }
}

// --- criterion 4 -----------------------------------------------------

void criterion_word_identities() {
    std::mt19937 rng(5150);

    // Overlapping at shared symbols and at shared factors coincide.
    for (int i = 0; i < 150; ++i) {
        const Word w1 = W(oracle::random_string(rng, 3, 0, 10));
        const Word w2 = W(oracle::random_string(rng, 3, 0, 10));
        expect(gsco_pair(w1, w2, PairMode::kSymbols).words ==
                   gsco_pair(w1, w2, PairMode::kSubstrings).words,
               "symbol vs factor overlap differ on '" +
                   format_word(w1) + "' and '" + format_word(w2) + "'");
    }

    // The rule x#$x# makes one splicing step a crossover step.
    for (int i = 0; i < 150; ++i) {
        const Word w1 = W(oracle::random_string(rng, 2, 1, 8));
        const Word w2 = W(oracle::random_string(rng, 2, 1, 8));
        const Symbol x = (i % 2 == 0) ? "a" : "b";
        expect(splice_pair(w1, w2, crossover_rule(x)).words ==
                   gsco_at(w1, w2, Word{x}).words,
               "splicing at " + x + "#$" + x + "# differs from crossover "
                                              "at " +
                   x);
    }

    // Restricted = unrestricted iteration, and one direction is enough.
    for (int i = 0; i < 8; ++i) {
        const FiniteLanguage l =
            oracle::to_language(oracle::random_language(rng, 2, 4, 3));
        ClosureConfig two = cfg(4, 7);
        ClosureConfig one = two;
        one.direction = DirectionMode::kOneGsco;
        const OverlapSet r = OverlapSet::all();
        const WordSet u1 = bounded_closure_u(l, r, one).words;
        const WordSet u2 = bounded_closure_u(l, r, two).words;
        expect(bounded_closure_r(l, r, one).words == u1,
               "restricted and unrestricted one-direction closures "
               "differ");
        expect(bounded_closure_r(l, r, two).words == u2,
               "restricted and unrestricted closures differ");
        expect(u1 == u2, "one- and two-direction closures differ");
    }

    // The pair closure is the splicing closure once every alphabet
    // symbol is a rule; with nothing shared it is just the union.
    for (int i = 0; i < 8; ++i) {
        const FiniteLanguage l1 =
            oracle::to_language(oracle::random_language(rng, 2, 2, 3));
        const FiniteLanguage l2 =
            oracle::to_language(oracle::random_language(rng, 2, 2, 3));
        expect(bounded_gs(l1, l2, ov("ab"), cfg(4, 6)).words ==
                   bounded_closure_pair(l1, l2, OverlapSet::all(),
                                        cfg(4, 6))
                       .words,
               "splicing closure with all-symbol rules differs from the "
               "pair closure");
    }
    expect(bounded_closure_pair(lang({"ab"}), lang({"cd"}),
                                OverlapSet::all(), cfg(4, 8))
                   .words == lang({"ab", "cd"}).words,
           "pair closure over disjoint alphabets is not the plain union");
}

// --- criterion 5 -----------------------------------------------------

void criterion_pair_decomposition() {
    std::vector<std::pair<FiniteLanguage, FiniteLanguage>> pairs = {
        {lang({"ab"}), lang({"ba"})},
        {lang({"ab"}), lang({"cd"})},
        {lang({"a"}), lang({"ab", "b"})},
    };
    std::mt19937 rng(6401);
    for (int i = 0; i < 8; ++i) {
        pairs.emplace_back(
            oracle::to_language(oracle::random_language(rng, 2, 2, 2)),
            oracle::to_language(oracle::random_language(rng, 2, 2, 2)));
    }
    int index = 0;
    for (const auto& [l1, l2] : pairs) {
        ++index;
        const Nfa bare = gsco_star_pair_nfa(
            nfa_from_words(l1), nfa_from_words(l2), OverlapSet::all(),
            /*include_base=*/false);
        WordSet rhs = enumerate(bare, 4).words;
        for (const Word& w : l1.words) {
            rhs.insert(w);
        }
        for (const Word& w : l2.words) {
            rhs.insert(w);
        }
        expect(bounded_closure_pair(l1, l2, OverlapSet::all(),
                                    cfg(4, 8))
                       .words == slice(rhs, 4),
               "pair " + std::to_string(index) +
                   ": closure differs from base + crossover of "
                   "saturations");
    }

    // With nothing shared, the crossover part is empty, so the base is
    // the whole closure — dropping it must leave the empty language.
    const Nfa bare = gsco_star_pair_nfa(nfa_from_words(lang({"ab"})),
                                        nfa_from_words(lang({"cd"})),
                                        OverlapSet::all(), false);
    expect(is_empty(bare),
           "crossover of saturations over disjoint alphabets is "
           "nonempty");
    const Nfa with_base = gsco_star_pair_nfa(nfa_from_words(lang({"ab"})),
                                             nfa_from_words(lang({"cd"})),
                                             OverlapSet::all(), true);
    expect(equivalent(with_base, nfa_from_words(lang({"ab", "cd"}))),
           "pair-closure automaton over disjoint alphabets is not the "
           "union");
}

// --- criterion 6 -----------------------------------------------------

void criterion_regularity() {
    const std::vector<Nfa> operands = {
        nfa_from_words(lang({"ab", "ba"})), nfa_from_words(lang({"a"})),
        from_re("a*b"),                     from_re("ba*"),
        from_re("(a|b)*"),                  nfa_from_words(anbn()),
    };
    int index = 0;
    for (const Nfa& m1 : operands) {
        for (const Nfa& m2 : operands) {
            ++index;
            const std::string tag =
                "operand pair " + std::to_string(index);
            const OverlapSet r = (index % 2 == 0) ? ov("a") : ov("ab");
            const Nfa g = gs_nfa(m1, m2, r, /*include_base=*/false);
            const Nfa rebuilt =
                make_nfa(g.state_count, g.alphabet, g.transitions,
                         g.start, g.finals);
            expect(rebuilt.transitions == g.transitions &&
                       rebuilt.finals == g.finals,
                   tag + ": splicing automaton is not canonical");
            const Dfa d = minimize(determinize(g));
            expect(d.state_count >= 1,
                   tag + ": minimization produced no automaton");
        }
    }

    // The {aⁿbⁿ : n ≤ 4} truncation saturates to exactly a⁺b⁺.
    const Nfa sat = saturate(nfa_from_words(anbn()), OverlapSet::all());
    bool agree = true;
    for (const std::string& s : oracle::all_strings(2, 8, true)) {
        std::size_t a_run = 0;
        while (a_run < s.size() && s[a_run] == 'a') {
            ++a_run;
        }
        const bool in_apbp = a_run >= 1 && a_run < s.size() &&
                             s.find('a', a_run) == std::string::npos;
        if (member(sat, W(s)) != in_apbp) {
            agree = false;
            break;
        }
    }
    expect(agree, "saturation of {a^n b^n : n <= 4} differs from a+b+ "
                  "on a word of length <= 8");
    expect(equivalent(sat, from_re("aa*bb*")),
           "saturation of {a^n b^n : n <= 4} is not equivalent to "
           "aa*bb*");
}

// --- criterion 7 -----------------------------------------------------

void criterion_kernel_laws() {
    expect(write_automaton(nfa_from_words(lang({"a"}))) ==
               "alphabet: a\n"
               "states: 2\n"
               "start: 0\n"
               "finals: 1\n"
               "trans:\n"
               "0 a 1\n",
           "canonical text form of the one-word automaton changed");
    int index = 0;
    for (const Nfa& m : corpus()) {
        ++index;
        const std::string tag = "corpus automaton " + std::to_string(index);
        expect(equivalent(trim(m), m), tag + ": trim changed the language");
        const Dfa d = determinize(m);
        expect(equivalent(d.to_nfa(), m),
               tag + ": determinize changed the language");
        const Dfa md = minimize(d);
        expect(equivalent(md.to_nfa(), m),
               tag + ": minimize changed the language");
        expect(same_dfa(md, minimize(md)),
               tag + ": minimize is not idempotent");
        expect(same_dfa(md, minimize(determinize(union_nfa(m, m)))),
               tag + ": equivalent automata minimize differently");
        const std::string text = write_automaton(m);
        expect(write_automaton(read_automaton(text)) == text,
               tag + ": serialization round trip is not byte-identical");
    }
}

// --- criterion 8 -----------------------------------------------------

Nfa big_nfa(std::mt19937& rng) {
    const std::size_t n = 1000;
    const Alphabet alphabet = {"a", "b", "c", "d"};
    std::uniform_int_distribution<std::size_t> state(0, n - 1);
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::vector<Transition> trans;
    // A chain backbone keeps every state (and so every extra edge) on
    // an accepting path: nothing is lost to trimming.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        trans.push_back({i, alphabet[sym(rng)], i + 1});
    }
    for (int e = 0; e < 3000; ++e) {
        trans.push_back({state(rng), alphabet[sym(rng)], state(rng)});
    }
    return make_nfa(n, alphabet, std::move(trans), 0, {n - 1});
}

std::map<Symbol, std::size_t> label_counts(const Nfa& m) {
    std::map<Symbol, std::size_t> counts;
    for (const Transition& t : m.transitions) {
        if (!is_epsilon(t.label)) {
            ++counts[t.label];
        }
    }
    return counts;
}

void criterion_performance() {
    using clock = std::chrono::steady_clock;
    std::mt19937 rng(77);
    const Nfa m1 = big_nfa(rng);
    const Nfa m2 = big_nfa(rng);
    const auto c1 = label_counts(m1);
    const auto c2 = label_counts(m2);

    auto t0 = clock::now();
    BridgeReport sat_report;
    const Nfa sat = saturate(m1, OverlapSet::all(), &sat_report);
    const auto sat_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            clock::now() - t0)
                            .count();
    expect(sat_ms < 1000, "saturate took " + std::to_string(sat_ms) + "ms");

    t0 = clock::now();
    const CrossResult crossed = cross_nfa(m1, m2, OverlapSet::all());
    const auto cross_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() -
                                                              t0)
            .count();
    expect(cross_ms < 1000,
           "cross_nfa took " + std::to_string(cross_ms) + "ms");

    // One hub per symbol, fed by every labeled transition once: the
    // reports must reproduce the per-label transition counts of the
    // operands, and each hub contributes sources + targets edges.
    expect(sat.state_count == m1.state_count + c1.size(),
           "saturation added more than one hub per symbol");
    expect(sat_report.entries.size() == c1.size(),
           "saturation report has " +
               std::to_string(sat_report.entries.size()) + " entries");
    for (const BridgeEntry& e : sat_report.entries) {
        expect(e.role == "self" && e.sources == c1.at(e.symbol) &&
                   e.targets == c1.at(e.symbol) &&
                   e.edges_added == 2 * c1.at(e.symbol),
               "saturation report row for " + e.symbol +
                   " does not match the transition counts");
    }

    expect(crossed.report.entries.size() == c1.size() + c2.size(),
           "crossover report has " +
               std::to_string(crossed.report.entries.size()) + " entries");
    std::size_t total = 0;
    for (const BridgeEntry& e : crossed.report.entries) {
        const auto& from = (e.role == "fwd") ? c1 : c2;
        const auto& into = (e.role == "fwd") ? c2 : c1;
        expect((e.role == "fwd" || e.role == "rev") &&
                   e.sources == from.at(e.symbol) &&
                   e.targets == into.at(e.symbol) &&
                   e.edges_added == e.sources + e.targets,
               "crossover report row for " + e.symbol + "/" + e.role +
                   " does not match the transition counts");
        total += e.edges_added;
    }
    expect(crossed.report.total_edges() == total,
           "report total does not add up");
    expect(crossed.nfa.state_count <=
               2 * (m1.state_count + m2.state_count) + 2 * c1.size() + 1,
           "crossover automaton is not linear in the operands");
}

} // namespace

int main() {
    criterion(1, "one-step crossover automata match the word-level "
                 "operation",
              criterion_one_step);
    criterion(2, "closure automata agree with membership DP and the "
                 "bounded closure",
              criterion_closure);
    criterion(3, "saturation is idempotent and crossover-closed",
              criterion_idempotence);
    criterion(4, "word-level identities hold on the bounded corpus",
              criterion_word_identities);
    criterion(5, "pair closure = base + crossover of saturations",
              criterion_pair_decomposition);
    criterion(6, "splicing of finite and regular operands stays regular",
              criterion_regularity);
    criterion(7, "kernel laws: trim, determinize, minimize, serialize",
              criterion_kernel_laws);
    criterion(8, "performance guard on 1000-state automata",
              criterion_performance);
    if (failed_criteria == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
    } else {
        std::cout << "acceptance: " << failed_criteria
                  << " criteria failed\n";
    }
    return failed_criteria;
}
