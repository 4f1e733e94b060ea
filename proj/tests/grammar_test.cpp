#include <doctest.h>

#include <random>

#include "spk/grammar.hpp"

using namespace spk;

namespace {

SpkGrammar make_sp2_abcd() {
    return parse_grammar("alphabet: abcd\nk: 2\nforbidden: ab\n");
}

// Exhaustive embedding search, the independent check for greedy matching.
bool embeds(const Subsequence& v, const SymbolString& w, std::size_t vi, std::size_t wi) {
    if (vi == v.size()) return true;
    for (std::size_t i = wi; i < w.size(); ++i) {
        if (w[i] == v[vi] && embeds(v, w, vi + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("parse_grammar accepts the paper's SP2 example") {
    SpkGrammar g = make_sp2_abcd();
    CHECK(g.alphabet.size() == 4);
    CHECK(g.k == 2);
    CHECK(g.forbidden.size() == 1);
    CHECK(g.permissible_count() == 15);
}

TEST_CASE("parse_grammar accepts SP3 with forbidden aba") {
    SpkGrammar g = parse_grammar("alphabet: ab\nk: 3\nforbidden: aba\n");
    CHECK(g.permissible_count() == 7);
}

TEST_CASE("parse_grammar rejects invalid inputs") {
    CHECK_THROWS_AS(parse_grammar("alphabet: aab\nk: 2\nforbidden: ab\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 2\nforbidden: abb\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 2\nforbidden: \n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 2\nforbidden: aa,ab,ba,bb\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 2\nforbidden: ax\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 2\nforbidden: ab,ab\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("alphabet: ab\nk: 1\nforbidden: a\n"), ParseError);
}

TEST_CASE("grammar serialization round-trips exactly") {
    SpkGrammar g = parse_grammar("# comment\nalphabet: abcd\nk: 2\nforbidden: dc,ab,bc\n");
    SpkGrammar g2 = parse_grammar(serialize_grammar(g));
    CHECK(g == g2);
    CHECK(serialize_grammar(g) == serialize_grammar(g2));
    CHECK(grammar_fingerprint(g) == grammar_fingerprint(g2));
}

TEST_CASE("is_subsequence matches the paper's examples") {
    SpkGrammar g = make_sp2_abcd();
    auto w = g.alphabet.encode("acbd");
    CHECK(is_subsequence(g.alphabet.encode("bd"), w));
    CHECK(is_subsequence(g.alphabet.encode("acd"), w));
    CHECK(!is_subsequence(g.alphabet.encode("db"), w));
    CHECK(!is_subsequence(g.alphabet.encode("a"), {}));
    CHECK(is_subsequence({}, {}));
}

TEST_CASE("greedy matching agrees with exhaustive embedding search") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> sym(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
        SymbolString w(rng() % 11);
        for (auto& c : w) c = static_cast<SymbolId>(sym(rng));
        Subsequence v(1 + rng() % 4);
        for (auto& c : v) c = static_cast<SymbolId>(sym(rng));
        CHECK(is_subsequence(v, w) == embeds(v, w, 0, 0));
    }
}

TEST_CASE("subseq_k enumerates distinct subsequences up to length k") {
    SpkGrammar g = make_sp2_abcd();
    auto expected = [&](const char* const* items, std::size_t n) {
        std::set<Subsequence> out;
        for (std::size_t i = 0; i < n; ++i) out.insert(g.alphabet.encode(items[i]));
        return out;
    };

    const char* acbd2[] = {"a", "c", "b", "d", "ac", "ab", "ad", "cb", "cd", "bd"};
    CHECK(subseq_k(g.alphabet.encode("acbd"), 2) == expected(acbd2, 10));

    const char* aa2[] = {"a", "aa"};
    CHECK(subseq_k(g.alphabet.encode("aa"), 2) == expected(aa2, 2));

    CHECK(subseq_k(g.alphabet.encode("abc"), 3).size() == 7);
}

TEST_CASE("subseq_k size is bounded by binomial sums") {
    // Equality when all symbols distinct.
    SpkGrammar g = make_sp2_abcd();
    auto w = g.alphabet.encode("abcd");
    // C(4,1)+C(4,2) = 4+6
    CHECK(subseq_k(w, 2).size() == 10);
    // Repeats only shrink the set.
    CHECK(subseq_k(g.alphabet.encode("abab"), 2).size() <= 10);
}

TEST_CASE("oracle_is_valid matches the paper's examples") {
    SpkGrammar sp2 = make_sp2_abcd();
    CHECK(oracle_is_valid(sp2, sp2.alphabet.encode("bbcbdd")));
    CHECK(oracle_is_valid(sp2, sp2.alphabet.encode("bbdbbbcbddaa")));
    CHECK(!oracle_is_valid(sp2, sp2.alphabet.encode("bbabbbcbdd")));
    CHECK(oracle_is_valid(sp2, {}));

    SpkGrammar sp3 = parse_grammar("alphabet: ab\nk: 3\nforbidden: aba\n");
    CHECK(oracle_is_valid(sp3, sp3.alphabet.encode("aaaaaaab")));
    CHECK(!oracle_is_valid(sp3, sp3.alphabet.encode("aaaaabaab")));
}

TEST_CASE("validity is closed under symbol deletion") {
    SpkGrammar g = parse_grammar("alphabet: abc\nk: 2\nforbidden: ab,ca\n");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> sym(0, 2);
    int checked = 0;
    while (checked < 200) {
        SymbolString w(1 + rng() % 8);
        for (auto& c : w) c = static_cast<SymbolId>(sym(rng));
        if (!oracle_is_valid(g, w)) continue;
        ++checked;
        for (std::size_t drop = 0; drop < w.size(); ++drop) {
            SymbolString u;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i != drop) u.push_back(w[i]);
            }
            CHECK(oracle_is_valid(g, u));
        }
    }
}
