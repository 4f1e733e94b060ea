#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "spk/automaton.hpp"

namespace spk {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic per-string random stream. The stream for string index i is
/// derived from (master seed, i) alone, so generated output is independent
/// of scheduling order.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::mt19937_64& engine() { return engine_; }

    /// Uniform draw from [0, bound), exact over big integers.
    BigInt below(const BigInt& bound);

private:
    std::mt19937_64 engine_;
};

/// Exact count of valid strings per (state, remaining length). Immutable
/// after construction; powers uniform sampling.
class LengthCountTable {
public:
    LengthCountTable(const PiecewiseDfa& dfa, std::size_t max_length);

    std::size_t max_length() const { return max_length_; }

    /// counts[s][r]: number of length-r continuations from state s.
    const BigInt& count(std::uint32_t state, std::size_t remaining) const {
        return counts_[remaining * state_count_ + state];
    }

    /// Number of valid strings of exactly the given length.
    const BigInt& count_valid(std::size_t length) const;

    /// Draws a string exactly uniformly from the valid strings of the given
    /// length. Throws EmptyLanguageError if the slice is empty.
    SymbolString sample_uniform(std::size_t length, RngStream& rng) const;

private:
    const PiecewiseDfa* dfa_;
    std::size_t state_count_;
    std::size_t max_length_;
    std::vector<BigInt> counts_;  // indexed [remaining][state]
};

}  // namespace spk
