#include "spk/counting.hpp"

#include <boost/random/uniform_int_distribution.hpp>

namespace spk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t mixed = splitmix64(splitmix64(master_seed) ^ (stream_index * 0xd1342543de82ef95ULL + 1));
    std::seed_seq seq{static_cast<std::uint32_t>(mixed), static_cast<std::uint32_t>(mixed >> 32),
                      static_cast<std::uint32_t>(splitmix64(mixed)),
                      static_cast<std::uint32_t>(splitmix64(mixed) >> 32)};
    engine_ = std::mt19937_64(seq);
}

BigInt RngStream::below(const BigInt& bound) {
    boost::random::uniform_int_distribution<BigInt> dist(0, bound - 1);
    return dist(engine_);
}

LengthCountTable::LengthCountTable(const PiecewiseDfa& dfa, std::size_t max_length)
    : dfa_(&dfa), state_count_(dfa.state_count()), max_length_(max_length) {
    const std::size_t vocab = dfa.alphabet_size();
    counts_.assign((max_length_ + 1) * state_count_, BigInt(0));
    for (std::uint32_t s = 0; s < state_count_; ++s) {
        counts_[s] = (s == dfa.dead_state()) ? 0 : 1;
    }
    for (std::size_t r = 1; r <= max_length_; ++r) {
        for (std::uint32_t s = 0; s < state_count_; ++s) {
            if (s == dfa.dead_state()) continue;
            BigInt total = 0;
            for (std::size_t sym = 0; sym < vocab; ++sym) {
                total += counts_[(r - 1) * state_count_ + dfa.step(s, static_cast<SymbolId>(sym))];
            }
            counts_[r * state_count_ + s] = std::move(total);
        }
    }
}

const BigInt& LengthCountTable::count_valid(std::size_t length) const {
    return count(dfa_->initial_state(), length);
}

SymbolString LengthCountTable::sample_uniform(std::size_t length, RngStream& rng) const {
    const BigInt& total = count_valid(length);
    if (total == 0) {
        throw EmptyLanguageError("no valid strings of length " + std::to_string(length));
    }
    SymbolString out;
    out.reserve(length);
    std::uint32_t state = dfa_->initial_state();
    const std::size_t vocab = dfa_->alphabet_size();
    for (std::size_t r = length; r > 0; --r) {
        BigInt pick = rng.below(count(state, r));
        for (std::size_t sym = 0; sym < vocab; ++sym) {
            std::uint32_t next = dfa_->step(state, static_cast<SymbolId>(sym));
            const BigInt& c = count(next, r - 1);
            if (pick < c) {
                out.push_back(static_cast<SymbolId>(sym));
                state = next;
                break;
            }
            pick -= c;
        }
    }
    return out;
}

}  // namespace spk
