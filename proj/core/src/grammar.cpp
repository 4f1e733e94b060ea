#include "spk/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spk {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.size() < 2) {
        throw ParseError("alphabet needs at least 2 symbols, got " +
                         std::to_string(symbols_.size()));
    }
    if (symbols_.size() > 255) {
        throw ParseError("alphabet larger than 255 symbols is not supported");
    }
    std::fill(std::begin(index_), std::end(index_), -1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (index_[c] >= 0) {
            throw ParseError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        }
        index_[c] = static_cast<int>(i);
    }
}

SymbolId Alphabet::id(char c) const {
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) {
        throw ParseError(std::string("symbol '") + c + "' is not in the alphabet");
    }
    return static_cast<SymbolId>(i);
}

SymbolString Alphabet::encode(std::string_view text) const {
    SymbolString out;
    out.reserve(text.size());
    for (char c : text) out.push_back(id(c));
    return out;
}

std::string Alphabet::decode(const SymbolString& ids) const {
    std::string out;
    out.reserve(ids.size());
    for (SymbolId s : ids) out.push_back(symbols_[s]);
    return out;
}

std::uint64_t SpkGrammar::permissible_count() const {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= alphabet.size();
    return total - forbidden.size();
}

bool SpkGrammar::operator==(const SpkGrammar& other) const {
    return alphabet == other.alphabet && k == other.k && forbidden == other.forbidden;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// V^k would overflow for large alphabets; saturating is fine for the
// "forbidden == sigma^k" check since |forbidden| is always small.
bool forbidden_covers_everything(std::size_t vocab, int k, std::size_t nforbidden) {
    long double total = std::pow(static_cast<long double>(vocab), k);
    return static_cast<long double>(nforbidden) >= total;
}

}  // namespace

SpkGrammar parse_grammar(std::string_view text) {
    std::string alphabet_line, k_line, forbidden_line;
    bool have_alphabet = false, have_k = false, have_forbidden = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("malformed grammar line: " + std::string(line));
        }
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = trim(line.substr(colon + 1));
        if (key == "alphabet") {
            alphabet_line = value;
            have_alphabet = true;
        } else if (key == "k") {
            k_line = value;
            have_k = true;
        } else if (key == "forbidden") {
            forbidden_line = value;
            have_forbidden = true;
        } else {
            throw ParseError("unknown grammar key: " + std::string(key));
        }
    }
    if (!have_alphabet || !have_k || !have_forbidden) {
        throw ParseError("grammar file must define alphabet, k, and forbidden");
    }

    SpkGrammar g;
    g.alphabet = Alphabet(alphabet_line);

    try {
        std::size_t pos = 0;
        g.k = std::stoi(k_line, &pos);
        if (pos != k_line.size()) throw std::invalid_argument(k_line);
    } catch (const std::exception&) {
        throw ParseError("invalid k value: " + k_line);
    }
    if (g.k < 2) {
        throw ParseError("k must be at least 2, got " + std::to_string(g.k));
    }

    std::set<Subsequence> entries;
    std::istringstream fin(forbidden_line);
    std::string entry;
    while (std::getline(fin, entry, ',')) {
        std::string_view e = trim(entry);
        if (e.empty()) throw ParseError("empty forbidden entry");
        if (static_cast<int>(e.size()) != g.k) {
            throw ParseError("forbidden entry '" + std::string(e) + "' has length " +
                             std::to_string(e.size()) + ", expected k=" + std::to_string(g.k));
        }
        Subsequence ids = g.alphabet.encode(e);
        if (!entries.insert(ids).second) {
            throw ParseError("duplicate forbidden entry: " + std::string(e));
        }
    }
    if (entries.empty()) {
        throw ParseError("grammar must have at least one forbidden subsequence");
    }
    if (forbidden_covers_everything(g.alphabet.size(), g.k, entries.size())) {
        throw ParseError("forbidden set equals sigma^k; the language would be empty");
    }
    g.forbidden.assign(entries.begin(), entries.end());
    return g;
}

std::string serialize_grammar(const SpkGrammar& g) {
    std::string out;
    out += "alphabet: " + g.alphabet.symbols() + "\n";
    out += "k: " + std::to_string(g.k) + "\n";
    out += "forbidden: ";
    for (std::size_t i = 0; i < g.forbidden.size(); ++i) {
        if (i) out += ',';
        out += g.alphabet.decode(g.forbidden[i]);
    }
    out += "\n";
    return out;
}

SpkGrammar load_grammar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open grammar file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grammar(buf.str());
}

std::string grammar_fingerprint(const SpkGrammar& g) {
    // FNV-1a 64 over the canonical serialization.
    std::string text = serialize_grammar(g);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool is_subsequence(const Subsequence& v, const SymbolString& w) {
    std::size_t i = 0;
    for (SymbolId c : w) {
        if (i < v.size() && c == v[i]) ++i;
    }
    return i == v.size();
}

std::set<Subsequence> subseq_k(const SymbolString& w, int k) {
    // DP over prefixes: extend every stored subsequence shorter than k.
    std::set<Subsequence> out;
    for (SymbolId c : w) {
        std::set<Subsequence> extended;
        for (const auto& s : out) {
            if (static_cast<int>(s.size()) < k) {
                Subsequence e = s;
                e.push_back(c);
                extended.insert(std::move(e));
            }
        }
        out.insert(extended.begin(), extended.end());
        out.insert(Subsequence{c});
    }
    return out;
}

bool oracle_is_valid(const SpkGrammar& g, const SymbolString& w) {
    for (SymbolId c : w) {
        if (c >= g.alphabet.size()) {
            throw ParseError("symbol id " + std::to_string(c) + " outside alphabet");
        }
    }
    for (const auto& f : g.forbidden) {
        if (is_subsequence(f, w)) return false;
    }
    return true;
}

}  // namespace spk
