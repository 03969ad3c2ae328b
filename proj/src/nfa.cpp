#include "gsco/nfa.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace gsco {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct Adjacency {
    std::vector<std::vector<State>> eps;
    std::vector<std::vector<std::pair<Symbol, State>>> moves;
};

Adjacency build_adjacency(const Nfa& m) {
    Adjacency adj;
    adj.eps.resize(m.state_count);
    adj.moves.resize(m.state_count);
    for (const Transition& t : m.transitions) {
        if (is_epsilon(t.label)) {
            adj.eps[t.src].push_back(t.dst);
        } else {
            adj.moves[t.src].emplace_back(t.label, t.dst);
        }
    }
    return adj;
}

std::vector<State> closure_of(const Adjacency& adj, std::vector<State> states) {
    std::vector<bool> seen(adj.eps.size(), false);
    std::deque<State> queue;
    for (State s : states) {
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    states.clear();
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        states.push_back(s);
        for (State t : adj.eps[s]) {
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    std::sort(states.begin(), states.end());
    return states;
}

std::vector<State> move_on(const Adjacency& adj, const std::vector<State>& states,
                           const Symbol& symbol) {
    std::vector<State> out;
    for (State s : states) {
        for (const auto& [label, dst] : adj.moves[s]) {
            if (label == symbol) {
                out.push_back(dst);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Minimum number of symbols needed to reach a final state, per state.
/// 0-1 BFS over the reversed graph; ε-moves cost nothing.
std::vector<std::size_t> distance_to_final(const Nfa& m) {
    std::vector<std::vector<State>> rev_eps(m.state_count);
    std::vector<std::vector<State>> rev_sym(m.state_count);
    for (const Transition& t : m.transitions) {
        (is_epsilon(t.label) ? rev_eps : rev_sym)[t.dst].push_back(t.src);
    }
    std::vector<std::size_t> dist(m.state_count, kUnreachable);
    std::deque<State> queue;
    for (State f : m.finals) {
        dist[f] = 0;
        queue.push_back(f);
    }
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (State p : rev_eps[s]) {
            if (dist[s] < dist[p]) {
                dist[p] = dist[s];
                queue.push_front(p);
            }
        }
        for (State p : rev_sym[s]) {
            if (dist[s] + 1 < dist[p]) {
                dist[p] = dist[s] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

bool intersects_finals(const Nfa& m, const std::vector<State>& states) {
    for (State s : states) {
        if (m.is_final(s)) {
            return true;
        }
    }
    return false;
}

} // namespace

bool Nfa::is_final(State s) const {
    return std::binary_search(finals.begin(), finals.end(), s);
}

Nfa make_nfa(std::size_t state_count, Alphabet alphabet,
             std::vector<Transition> transitions, State start,
             std::vector<State> finals) {
    Nfa m;
    m.state_count = state_count;
    m.alphabet = make_alphabet(std::move(alphabet));
    if (start >= state_count) {
        throw SemanticError("start state " + std::to_string(start) + " out of range");
    }
    m.start = start;
    for (State f : finals) {
        if (f >= state_count) {
            throw SemanticError("final state " + std::to_string(f) + " out of range");
        }
    }
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
    m.finals = std::move(finals);
    for (const Transition& t : transitions) {
        if (t.src >= state_count || t.dst >= state_count) {
            throw SemanticError("transition state out of range: " + std::to_string(t.src) +
                                " -> " + std::to_string(t.dst));
        }
        if (!is_epsilon(t.label) && !alphabet_contains(m.alphabet, t.label)) {
            throw SemanticError("transition label '" + t.label + "' not in alphabet");
        }
    }
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()),
                      transitions.end());
    m.transitions = std::move(transitions);
    return m;
}

Nfa empty_nfa(Alphabet alphabet) {
    return make_nfa(1, std::move(alphabet), {}, 0, {});
}

bool member(const Nfa& m, const Word& w) {
    for (const Symbol& s : w) {
        if (!alphabet_contains(m.alphabet, s)) {
            return false;
        }
    }
    Adjacency adj = build_adjacency(m);
    std::vector<State> current = closure_of(adj, {m.start});
    for (const Symbol& s : w) {
        current = closure_of(adj, move_on(adj, current, s));
        if (current.empty()) {
            return false;
        }
    }
    return intersects_finals(m, current);
}

FiniteLanguage enumerate(const Nfa& m, std::size_t max_len, std::size_t cap) {
    Adjacency adj = build_adjacency(m);
    std::vector<std::size_t> dist = distance_to_final(m);

    FiniteLanguage out;
    out.alphabet = m.alphabet;
    auto collect = [&](const Word& w) {
        if (out.words.size() >= cap) {
            throw CapError("enumeration cap of " + std::to_string(cap) + " words exceeded");
        }
        out.words.insert(w);
    };

    auto min_dist = [&](const std::vector<State>& states) {
        std::size_t best = kUnreachable;
        for (State s : states) {
            best = std::min(best, dist[s]);
        }
        return best;
    };

    // Level-order walk over live prefixes; every kept node extends to an
    // accepted word within the length bound, so work is proportional to
    // the output.
    using Node = std::pair<Word, std::vector<State>>;
    std::vector<Node> frontier;
    std::vector<State> initial = closure_of(adj, {m.start});
    if (min_dist(initial) <= max_len) {
        if (intersects_finals(m, initial)) {
            collect({});
        }
        frontier.emplace_back(Word{}, std::move(initial));
    }
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Node> next;
        for (const auto& [word, states] : frontier) {
            for (const Symbol& a : m.alphabet) {
                std::vector<State> target = closure_of(adj, move_on(adj, states, a));
                if (target.empty() || min_dist(target) > max_len - len) {
                    continue;
                }
                Word extended = word;
                extended.push_back(a);
                if (intersects_finals(m, target)) {
                    collect(extended);
                }
                next.emplace_back(std::move(extended), std::move(target));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Nfa trim(const Nfa& m) {
    std::vector<std::vector<State>> fwd(m.state_count), bwd(m.state_count);
    for (const Transition& t : m.transitions) {
        fwd[t.src].push_back(t.dst);
        bwd[t.dst].push_back(t.src);
    }
    auto reach = [&](const std::vector<std::vector<State>>& edges,
                     std::vector<State> seeds) {
        std::vector<bool> seen(m.state_count, false);
        std::deque<State> queue;
        for (State s : seeds) {
            if (!seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (State t : edges[s]) {
                if (!seen[t]) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        return seen;
    };
    std::vector<bool> accessible = reach(fwd, {m.start});
    std::vector<bool> useful = reach(bwd, m.finals);

    std::vector<State> remap(m.state_count, kUnreachable);
    std::size_t kept = 0;
    for (State s = 0; s < m.state_count; ++s) {
        if (accessible[s] && useful[s]) {
            remap[s] = kept++;
        }
    }
    if (remap[m.start] == kUnreachable) {
        return empty_nfa(m.alphabet);
    }
    std::vector<Transition> transitions;
    for (const Transition& t : m.transitions) {
        if (remap[t.src] != kUnreachable && remap[t.dst] != kUnreachable) {
            transitions.push_back({remap[t.src], t.label, remap[t.dst]});
        }
    }
    std::vector<State> finals;
    for (State f : m.finals) {
        if (remap[f] != kUnreachable) {
            finals.push_back(remap[f]);
        }
    }
    return make_nfa(kept, m.alphabet, std::move(transitions), remap[m.start],
                    std::move(finals));
}

Nfa union_nfa(const Nfa& m1, const Nfa& m2) {
    const State off1 = 1;
    const State off2 = 1 + m1.state_count;
    std::vector<Transition> transitions;
    transitions.push_back({0, kEpsilonLabel, off1 + m1.start});
    transitions.push_back({0, kEpsilonLabel, off2 + m2.start});
    for (const Transition& t : m1.transitions) {
        transitions.push_back({t.src + off1, t.label, t.dst + off1});
    }
    for (const Transition& t : m2.transitions) {
        transitions.push_back({t.src + off2, t.label, t.dst + off2});
    }
    std::vector<State> finals;
    for (State f : m1.finals) {
        finals.push_back(f + off1);
    }
    for (State f : m2.finals) {
        finals.push_back(f + off2);
    }
    return make_nfa(1 + m1.state_count + m2.state_count,
                    alphabet_union(m1.alphabet, m2.alphabet),
                    std::move(transitions), 0, std::move(finals));
}

bool is_empty(const Nfa& m) {
    return distance_to_final(m)[m.start] == kUnreachable;
}

std::vector<State> epsilon_closure(const Nfa& m, const std::vector<State>& from) {
    Adjacency adj = build_adjacency(m);
    return closure_of(adj, from);
}

} // namespace gsco
