#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spk/counting.hpp"

namespace spk {

/// Inclusive length band plus string count. Target lengths are spread
/// round-robin over the band, so per-length counts differ by at most one.
struct LengthPlan {
    std::size_t min_len = 2;
    std::size_t max_len = 2;
    std::size_t count = 1;

    void validate() const;
    std::size_t band_width() const { return max_len - min_len + 1; }
};

/// A generated collection of strings, in post-shuffle order.
struct Dataset {
    std::string grammar_fingerprint;
    std::uint64_t seed = 0;
    LengthPlan plan;
    std::vector<SymbolString> strings;
};

/// Flattened symbol sequence of a whole dataset, ready for MI profiling.
struct Corpus {
    std::vector<SymbolId> symbols;

    std::size_t size() const { return symbols.size(); }
};

/// Samples plan.count valid strings uniformly per length, lengths spread
/// round-robin over the band, then shuffles string order. Deterministic in
/// (grammar, plan, seed) regardless of thread count.
Dataset generate_dataset(const SpkGrammar& g, const LengthPlan& plan, std::uint64_t seed,
                         unsigned threads = 1,
                         std::size_t state_cap = PiecewiseDfa::kDefaultStateCap);

/// Contiguous split of the (already shuffled) string list. Sizes are floored
/// per fraction with the remainder going to the first (training) split.
/// Throws EmptyLanguageError if any split would be empty.
std::array<Dataset, 3> split_dataset(const Dataset& d, double train_frac, double valid_frac,
                                     double test_frac);

/// Concatenates strings in dataset order. A separator id, when given, is
/// inserted between consecutive strings; it must lie outside the grammar
/// alphabet (callers pass alphabet_size as the conventional separator id).
Corpus flatten(const Dataset& d, std::optional<SymbolId> separator = std::nullopt,
               std::size_t alphabet_size = 0);

/// Dataset file: one string per line, preceded by '#' header comments
/// carrying fingerprint, seed, and plan.
void write_dataset(const Dataset& d, const Alphabet& alphabet, const std::string& path);

/// Reads the strings of a dataset file (header comments skipped).
std::vector<std::string> read_dataset_lines(const std::string& path);

}  // namespace spk
