#include "spk/automaton.hpp"

#include <map>
#include <sstream>

namespace spk {

PiecewiseDfa PiecewiseDfa::compile(const SpkGrammar& g, std::size_t state_cap) {
    std::size_t config_space = 1;
    for (const auto& f : g.forbidden) {
        config_space *= f.size() + 1;
        if (config_space > state_cap) {
            throw StateCapError("DFA configuration space exceeds cap of " +
                                std::to_string(state_cap));
        }
    }

    PiecewiseDfa dfa;
    dfa.grammar_ = g;
    dfa.vocab_ = g.alphabet.size();

    // BFS over reachable progress vectors; dead state carved out up front so
    // any component completing its forbidden subsequence collapses into it.
    using Progress = std::vector<std::uint8_t>;
    std::map<Progress, std::uint32_t> ids;
    std::vector<Progress> order;

    Progress start(g.forbidden.size(), 0);
    dfa.initial_ = 0;
    dfa.dead_ = 1;
    ids[start] = 0;
    order.push_back(start);

    std::vector<std::vector<std::uint32_t>> rows;
    rows.emplace_back();  // initial, filled below
    rows.emplace_back(dfa.vocab_, 1);  // dead state absorbs everything

    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        Progress cur = order[qi];
        std::uint32_t cur_id = ids[cur];
        std::vector<std::uint32_t> row(dfa.vocab_);
        for (std::size_t sym = 0; sym < dfa.vocab_; ++sym) {
            Progress next = cur;
            bool died = false;
            for (std::size_t i = 0; i < g.forbidden.size(); ++i) {
                const auto& f = g.forbidden[i];
                if (next[i] < f.size() && f[next[i]] == static_cast<SymbolId>(sym)) {
                    ++next[i];
                    if (next[i] == f.size()) died = true;
                }
            }
            if (died) {
                row[sym] = dfa.dead_;
                continue;
            }
            auto [it, inserted] = ids.try_emplace(next, static_cast<std::uint32_t>(order.size() + 1));
            if (inserted) {
                order.push_back(next);
                rows.emplace_back();
            }
            row[sym] = it->second;
        }
        if (cur_id == 0) {
            rows[0] = std::move(row);
        } else {
            rows[cur_id] = std::move(row);
        }
    }

    dfa.state_count_ = static_cast<std::uint32_t>(order.size() + 1);
    dfa.transition_.reserve(static_cast<std::size_t>(dfa.state_count_) * dfa.vocab_);
    for (const auto& row : rows) {
        dfa.transition_.insert(dfa.transition_.end(), row.begin(), row.end());
    }
    return dfa;
}

bool PiecewiseDfa::accepts(const SymbolString& w) const {
    std::uint32_t s = initial_;
    for (SymbolId c : w) {
        if (c >= vocab_) {
            throw ParseError("symbol id " + std::to_string(c) + " outside alphabet");
        }
        s = step(s, c);
        if (s == dead_) return false;
    }
    return true;
}

std::string PiecewiseDfa::dump() const {
    std::ostringstream out;
    for (std::uint32_t s = 0; s < state_count_; ++s) {
        for (std::size_t sym = 0; sym < vocab_; ++sym) {
            out << s << ' ' << grammar_.alphabet.symbol(static_cast<SymbolId>(sym))
                << " -> " << step(s, static_cast<SymbolId>(sym)) << '\n';
        }
    }
    return out.str();
}

}  // namespace spk
