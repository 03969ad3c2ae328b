#include "gsco/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace gsco {

namespace {

std::vector<std::vector<State>> eps_adjacency(const Nfa& m) {
    std::vector<std::vector<State>> eps(m.state_count);
    for (const Transition& t : m.transitions) {
        if (is_epsilon(t.label)) {
            eps[t.src].push_back(t.dst);
        }
    }
    return eps;
}

std::vector<State> closure_of(const std::vector<std::vector<State>>& eps,
                              std::vector<State> states) {
    std::vector<bool> seen(eps.size(), false);
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
        for (State t : eps[s]) {
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    std::sort(states.begin(), states.end());
    return states;
}

} // namespace

bool Dfa::is_final(State s) const {
    return std::binary_search(finals.begin(), finals.end(), s);
}

Nfa Dfa::to_nfa() const {
    std::vector<Transition> transitions;
    transitions.reserve(table.size());
    for (State s = 0; s < state_count; ++s) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            transitions.push_back({s, alphabet[a], step(s, a)});
        }
    }
    return make_nfa(state_count, alphabet, std::move(transitions), start, finals);
}

Dfa determinize(const Nfa& m, std::size_t state_cap) {
    const std::size_t nsym = m.alphabet.size();

    // per-state, per-symbol targets for fast subset moves
    std::vector<std::vector<std::vector<State>>> moves(
        m.state_count, std::vector<std::vector<State>>(nsym));
    std::map<Symbol, std::size_t> symbol_index;
    for (std::size_t a = 0; a < nsym; ++a) {
        symbol_index[m.alphabet[a]] = a;
    }
    std::vector<std::vector<State>> eps = eps_adjacency(m);
    for (const Transition& t : m.transitions) {
        if (!is_epsilon(t.label)) {
            moves[t.src][symbol_index[t.label]].push_back(t.dst);
        }
    }

    Dfa d;
    d.alphabet = m.alphabet;
    d.start = 0;

    std::map<std::vector<State>, State> subset_id;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> subset) {
        auto [it, inserted] = subset_id.try_emplace(subset, subsets.size());
        if (inserted) {
            if (subsets.size() >= state_cap) {
                throw CapError("determinization cap of " + std::to_string(state_cap) +
                               " states exceeded");
            }
            subsets.push_back(std::move(subset));
        }
        return it->second;
    };

    intern(closure_of(eps, {m.start}));
    for (State s = 0; s < subsets.size(); ++s) {
        for (std::size_t a = 0; a < nsym; ++a) {
            std::vector<State> target;
            for (State q : subsets[s]) {
                target.insert(target.end(), moves[q][a].begin(), moves[q][a].end());
            }
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            d.table.push_back(intern(closure_of(eps, std::move(target))));
        }
    }

    d.state_count = subsets.size();
    for (State s = 0; s < d.state_count; ++s) {
        for (State q : subsets[s]) {
            if (m.is_final(q)) {
                d.finals.push_back(s);
                break;
            }
        }
    }
    return d;
}

namespace {

/// Restrict to states reachable from the start, renumbering breadth-first
/// with symbols in alphabet order.
Dfa reachable_part(const Dfa& d) {
    constexpr State kUnset = static_cast<State>(-1);
    std::vector<State> remap(d.state_count, kUnset);
    std::vector<State> order;
    remap[d.start] = 0;
    order.push_back(d.start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            State t = d.step(order[i], a);
            if (remap[t] == kUnset) {
                remap[t] = order.size();
                order.push_back(t);
            }
        }
    }
    Dfa out;
    out.state_count = order.size();
    out.alphabet = d.alphabet;
    out.start = 0;
    out.table.resize(out.state_count * d.alphabet.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            out.table[i * d.alphabet.size() + a] = remap[d.step(order[i], a)];
        }
    }
    for (State f : d.finals) {
        if (remap[f] != kUnset) {
            out.finals.push_back(remap[f]);
        }
    }
    std::sort(out.finals.begin(), out.finals.end());
    return out;
}

} // namespace

Dfa minimize(const Dfa& d) {
    Dfa r = reachable_part(d);
    const std::size_t nsym = r.alphabet.size();

    // Moore partition refinement, starting from the finality split. Each
    // round refines the previous partition, so the class count is stable
    // exactly when the partition is.
    std::vector<std::size_t> cls(r.state_count);
    std::size_t class_count = 1;
    for (State s = 0; s < r.state_count; ++s) {
        cls[s] = r.is_final(s) ? 1 : 0;
        class_count = std::max(class_count, cls[s] + 1);
    }
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(r.state_count);
        for (State s = 0; s < r.state_count; ++s) {
            std::vector<std::size_t> signature;
            signature.reserve(nsym + 1);
            signature.push_back(cls[s]);
            for (std::size_t a = 0; a < nsym; ++a) {
                signature.push_back(cls[r.step(s, a)]);
            }
            auto [it, _] = ids.try_emplace(std::move(signature), ids.size());
            next[s] = it->second;
        }
        bool stable = ids.size() == class_count;
        class_count = ids.size();
        cls = std::move(next);
        if (stable) {
            break;
        }
    }
    Dfa q;
    q.alphabet = r.alphabet;
    q.state_count = class_count;
    q.start = cls[r.start];
    q.table.assign(class_count * nsym, 0);
    std::vector<bool> final_class(class_count, false);
    for (State s = 0; s < r.state_count; ++s) {
        for (std::size_t a = 0; a < nsym; ++a) {
            q.table[cls[s] * nsym + a] = cls[r.step(s, a)];
        }
        if (r.is_final(s)) {
            final_class[cls[s]] = true;
        }
    }
    for (std::size_t c = 0; c < class_count; ++c) {
        if (final_class[c]) {
            q.finals.push_back(c);
        }
    }
    return reachable_part(q);
}

EquivalenceResult check_equivalent(const Nfa& m1, const Nfa& m2,
                                   std::size_t state_cap) {
    Alphabet sigma = alphabet_union(m1.alphabet, m2.alphabet);
    auto widen = [&](const Nfa& m) {
        return make_nfa(m.state_count, sigma, m.transitions, m.start, m.finals);
    };
    Dfa d1 = determinize(widen(m1), state_cap);
    Dfa d2 = determinize(widen(m2), state_cap);

    // breadth-first product walk; the first state pair that disagrees on
    // finality yields the shortest (lex-least) distinguishing word
    struct Node {
        State a, b;
        std::size_t parent;
        std::size_t via; // symbol index
    };
    std::map<std::pair<State, State>, bool> seen;
    std::vector<Node> nodes;
    std::deque<std::size_t> queue;
    nodes.push_back({d1.start, d2.start, static_cast<std::size_t>(-1), 0});
    seen[{d1.start, d2.start}] = true;
    queue.push_back(0);
    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        Node node = nodes[idx];
        if (d1.is_final(node.a) != d2.is_final(node.b)) {
            Word witness;
            for (std::size_t at = idx; nodes[at].parent != static_cast<std::size_t>(-1);
                 at = nodes[at].parent) {
                witness.push_back(sigma[nodes[at].via]);
            }
            std::reverse(witness.begin(), witness.end());
            return {false, std::move(witness)};
        }
        for (std::size_t a = 0; a < sigma.size(); ++a) {
            std::pair<State, State> next{d1.step(node.a, a), d2.step(node.b, a)};
            if (!seen[next]) {
                seen[next] = true;
                nodes.push_back({next.first, next.second, idx, a});
                queue.push_back(nodes.size() - 1);
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace gsco
