#include "gsco/construct.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

namespace gsco {

std::size_t BridgeReport::total_edges() const {
    std::size_t total = 0;
    for (const BridgeEntry& e : entries) {
        total += e.edges_added;
    }
    return total;
}

std::string BridgeReport::to_table() const {
    std::ostringstream out;
    out << std::left << std::setw(8) << "symbol" << std::setw(6) << "role"
        << std::right << std::setw(8) << "sources" << std::setw(8) << "targets"
        << std::setw(7) << "hub" << std::setw(7) << "edges" << '\n';
    for (const BridgeEntry& e : entries) {
        out << std::left << std::setw(8) << e.symbol << std::setw(6) << e.role
            << std::right << std::setw(8) << e.sources << std::setw(8)
            << e.targets << std::setw(7) << e.hub << std::setw(7)
            << e.edges_added << '\n';
    }
    return out.str();
}

namespace {

std::map<Symbol, std::vector<Transition>> by_symbol(const Nfa& m,
                                                    const Alphabet& symbols) {
    std::map<Symbol, std::vector<Transition>> out;
    for (const Symbol& a : symbols) {
        out[a];
    }
    for (const Transition& t : m.transitions) {
        auto it = out.find(t.label);
        if (it != out.end()) {
            it->second.push_back(t);
        }
    }
    return out;
}

/// D(A, B) over pre-trimmed operands: A's copy keeps its indices, B's
/// copy shifts by |A|, hubs follow. Start is A's, finals are B's.
Nfa build_directional(const Nfa& a, const Nfa& b, const Alphabet& symbols,
                      const char* role, BridgeReport* report) {
    const std::size_t nb_offset = a.state_count;
    std::vector<Transition> trans = a.transitions;
    for (const Transition& t : b.transitions) {
        trans.push_back({t.src + nb_offset, t.label, t.dst + nb_offset});
    }

    const auto from_a = by_symbol(a, symbols);
    const auto from_b = by_symbol(b, symbols);
    State next_state = a.state_count + b.state_count;
    for (const Symbol& x : symbols) {
        const std::vector<Transition>& sources = from_a.at(x);
        const std::vector<Transition>& targets = from_b.at(x);
        if (sources.empty() || targets.empty()) {
            continue;
        }
        const State hub = next_state++;
        for (const Transition& t : sources) {
            trans.push_back({t.src, x, hub});
        }
        for (const Transition& t : targets) {
            trans.push_back({hub, kEpsilonLabel, t.dst + nb_offset});
        }
        if (report != nullptr) {
            report->entries.push_back({x, role, sources.size(), targets.size(),
                                       hub,
                                       sources.size() + targets.size()});
        }
    }

    std::vector<State> finals;
    for (State f : b.finals) {
        finals.push_back(f + nb_offset);
    }
    return make_nfa(next_state, alphabet_union(a.alphabet, b.alphabet),
                    std::move(trans), a.start, std::move(finals));
}

void shift_hubs(BridgeReport& report, std::size_t from_index, State delta) {
    for (std::size_t i = from_index; i < report.entries.size(); ++i) {
        report.entries[i].hub += delta;
    }
}

} // namespace

Nfa directional_cross_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r) {
    const Nfa t1 = trim(m1);
    const Nfa t2 = trim(m2);
    const Alphabet symbols = r.resolve_alphabets(t1.alphabet, t2.alphabet);
    return build_directional(t1, t2, symbols, "fwd", nullptr);
}

CrossResult cross_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r) {
    const Nfa t1 = trim(m1);
    const Nfa t2 = trim(m2);
    const Alphabet symbols = r.resolve_alphabets(t1.alphabet, t2.alphabet);

    CrossResult result;
    const Nfa fwd =
        build_directional(t1, t2, symbols, "fwd", &result.report);
    const std::size_t fwd_entries = result.report.entries.size();
    const Nfa rev =
        build_directional(t2, t1, symbols, "rev", &result.report);

    // union_nfa places fwd at offset 1 and rev after it.
    shift_hubs(result.report, 0, 1);
    shift_hubs(result.report, fwd_entries, fwd.state_count);
    result.nfa = union_nfa(fwd, rev);
    return result;
}

Nfa saturate(const Nfa& m, const OverlapSet& r, BridgeReport* report) {
    const Nfa t = trim(m);
    const Alphabet symbols = r.resolve_alphabet(t.alphabet);
    const auto groups = by_symbol(t, symbols);

    std::vector<Transition> trans = t.transitions;
    State next_state = t.state_count;
    for (const Symbol& x : symbols) {
        const std::vector<Transition>& group = groups.at(x);
        if (group.empty()) {
            continue;
        }
        const State hub = next_state++;
        for (const Transition& tr : group) {
            trans.push_back({tr.src, x, hub});
            trans.push_back({hub, kEpsilonLabel, tr.dst});
        }
        if (report != nullptr) {
            report->entries.push_back(
                {x, "self", group.size(), group.size(), hub, 2 * group.size()});
        }
    }
    return make_nfa(next_state, t.alphabet, std::move(trans), t.start,
                    t.finals);
}

Nfa gsco_star_pair_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r,
                       bool include_base, BridgeReport* report) {
    const Nfa s1 = saturate(m1, r);
    const Nfa s2 = saturate(m2, r);
    CrossResult crossed = cross_nfa(s1, s2, r);
    if (report != nullptr) {
        *report = std::move(crossed.report);
    }
    if (!include_base) {
        return std::move(crossed.nfa);
    }
    if (report != nullptr) {
        shift_hubs(*report, 0, 1);
    }
    return union_nfa(crossed.nfa, union_nfa(m1, m2));
}

Nfa gs_nfa(const Nfa& m1, const Nfa& m2, const OverlapSet& r,
           bool include_base, BridgeReport* report) {
    if (r.is_all()) {
        throw SemanticError(
            "generalized splicing requires an explicit rule set");
    }
    return gsco_star_pair_nfa(m1, m2, r, include_base, report);
}

} // namespace gsco
