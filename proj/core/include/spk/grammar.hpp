#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spk/errors.hpp"

namespace spk {

using SymbolId = std::uint8_t;
using SymbolString = std::vector<SymbolId>;

/// Ordered set of distinct single-character symbols with dense ids 0..V-1.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    char symbol(SymbolId id) const { return symbols_[id]; }
    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    SymbolId id(char c) const;
    const std::string& symbols() const { return symbols_; }

    SymbolString encode(std::string_view text) const;
    std::string decode(const SymbolString& ids) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    int index_[256] = {};  // id+1 offset trick avoided; stores id or -1
};

/// A k-subsequence expressed as dense symbol ids.
using Subsequence = SymbolString;

/// An SPk grammar: alphabet, k, and a non-empty proper set of forbidden
/// length-k subsequences. Immutable after construction.
struct SpkGrammar {
    Alphabet alphabet;
    int k = 0;
    std::vector<Subsequence> forbidden;  // sorted, deduplicated

    /// Number of permissible k-subsequences, V^k - |forbidden|.
    /// Only meaningful when V^k fits in 64 bits; used for small examples.
    std::uint64_t permissible_count() const;

    bool operator==(const SpkGrammar& other) const;
};

/// Parses the line-oriented grammar file format:
///   alphabet: abcd
///   k: 2
///   forbidden: ab,bc
/// '#' lines are comments. Throws ParseError on any invariant violation.
SpkGrammar parse_grammar(std::string_view text);

/// Inverse of parse_grammar; parse(serialize(g)) == g exactly.
std::string serialize_grammar(const SpkGrammar& g);

/// Reads and parses a grammar file. Throws IoError / ParseError.
SpkGrammar load_grammar(const std::string& path);

/// Stable 64-bit fingerprint of the canonical serialization, as hex.
std::string grammar_fingerprint(const SpkGrammar& g);

/// True iff the symbols of v occur in w in order, not necessarily
/// contiguously. Greedy left-to-right matching.
bool is_subsequence(const Subsequence& v, const SymbolString& w);

/// All distinct subsequences of w of length 1..k inclusive.
std::set<Subsequence> subseq_k(const SymbolString& w, int k);

/// Brute-force membership: no forbidden entry is a subsequence of w.
/// Ground-truth oracle; not the production acceptance path.
bool oracle_is_valid(const SpkGrammar& g, const SymbolString& w);

}  // namespace spk
