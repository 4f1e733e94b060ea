#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spk/grammar.hpp"

namespace spk {

/// Complete deterministic acceptor for an SPk grammar. States are reachable
/// progress vectors (one matched-prefix counter per forbidden subsequence)
/// plus a single absorbing dead state. Every non-dead state accepts.
class PiecewiseDfa {
public:
    static constexpr std::size_t kDefaultStateCap = 1'000'000;

    /// Product construction over greedy match progress. Throws StateCapError
    /// if the configuration space exceeds state_cap.
    static PiecewiseDfa compile(const SpkGrammar& g, std::size_t state_cap = kDefaultStateCap);

    std::uint32_t state_count() const { return state_count_; }
    std::uint32_t initial_state() const { return initial_; }
    std::uint32_t dead_state() const { return dead_; }
    std::size_t alphabet_size() const { return vocab_; }
    const SpkGrammar& grammar() const { return grammar_; }

    std::uint32_t step(std::uint32_t state, SymbolId symbol) const {
        return transition_[static_cast<std::size_t>(state) * vocab_ + symbol];
    }

    /// Runs w from the initial state; true iff the final state is live.
    bool accepts(const SymbolString& w) const;

    /// Textual adjacency listing `state symbol -> state`, one edge per line,
    /// states numbered with initial=0. Debug / golden-test format.
    std::string dump() const;

private:
    PiecewiseDfa() = default;

    SpkGrammar grammar_;
    std::size_t vocab_ = 0;
    std::uint32_t state_count_ = 0;
    std::uint32_t initial_ = 0;
    std::uint32_t dead_ = 0;
    std::vector<std::uint32_t> transition_;  // state_count_ x vocab_
};

}  // namespace spk
