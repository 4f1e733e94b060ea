#include "spk/generator.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <thread>

namespace spk {

void LengthPlan::validate() const {
    if (min_len < 2) throw ParseError("minimum length must be at least 2");
    if (min_len > max_len) throw ParseError("length band is empty (min > max)");
    if (count < 1) throw ParseError("string count must be positive");
}

Dataset generate_dataset(const SpkGrammar& g, const LengthPlan& plan, std::uint64_t seed,
                         unsigned threads, std::size_t state_cap) {
    plan.validate();
    PiecewiseDfa dfa = PiecewiseDfa::compile(g, state_cap);
    LengthCountTable table(dfa, plan.max_len);
    for (std::size_t l = plan.min_len; l <= plan.max_len; ++l) {
        if (table.count_valid(l) == 0) {
            throw EmptyLanguageError("no valid strings of length " + std::to_string(l));
        }
    }

    Dataset d;
    d.grammar_fingerprint = grammar_fingerprint(g);
    d.seed = seed;
    d.plan = plan;
    d.strings.resize(plan.count);

    // String i targets length min + (i mod band); its rng stream depends only
    // on (seed, i), so the result is identical at any thread count.
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RngStream rng(seed, i);
            std::size_t length = plan.min_len + i % plan.band_width();
            d.strings[i] = table.sample_uniform(length, rng);
        }
    };
    if (threads <= 1 || plan.count < 2 * threads) {
        worker(0, plan.count);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (plan.count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(plan.count, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    // Fisher-Yates with explicit draws; std::shuffle would tie the byte
    // layout to the standard library's distribution internals.
    RngStream shuffle_rng(seed, ~std::uint64_t{0});
    for (std::size_t i = d.strings.size(); i > 1; --i) {
        std::uint64_t j = static_cast<std::uint64_t>(shuffle_rng.below(BigInt(i)));
        std::swap(d.strings[i - 1], d.strings[j]);
    }
    return d;
}

std::array<Dataset, 3> split_dataset(const Dataset& d, double train_frac, double valid_frac,
                                     double test_frac) {
    if (train_frac <= 0 || valid_frac <= 0 || test_frac <= 0) {
        throw ParseError("split fractions must be positive");
    }
    if (std::abs(train_frac + valid_frac + test_frac - 1.0) > 1e-9) {
        throw ParseError("split fractions must sum to 1");
    }
    std::size_t n = d.strings.size();
    std::size_t n_valid = static_cast<std::size_t>(valid_frac * n);
    std::size_t n_test = static_cast<std::size_t>(test_frac * n);
    if (n_valid + n_test >= n) throw EmptyLanguageError("training split would be empty");
    std::size_t n_train = n - n_valid - n_test;
    if (n_train == 0 || n_valid == 0 || n_test == 0) {
        throw EmptyLanguageError("a split would be empty at these fractions");
    }

    std::array<Dataset, 3> out;
    std::array<std::size_t, 3> sizes{n_train, n_valid, n_test};
    std::size_t offset = 0;
    for (int part = 0; part < 3; ++part) {
        out[part].grammar_fingerprint = d.grammar_fingerprint;
        out[part].seed = d.seed;
        out[part].plan = d.plan;
        out[part].plan.count = sizes[part];
        out[part].strings.assign(d.strings.begin() + offset,
                                 d.strings.begin() + offset + sizes[part]);
        offset += sizes[part];
    }
    return out;
}

Corpus flatten(const Dataset& d, std::optional<SymbolId> separator, std::size_t alphabet_size) {
    if (separator && *separator < alphabet_size) {
        throw ParseError("separator symbol collides with the grammar alphabet");
    }
    Corpus c;
    std::size_t total = 0;
    for (const auto& s : d.strings) total += s.size();
    if (separator && !d.strings.empty()) total += d.strings.size() - 1;
    c.symbols.reserve(total);
    for (std::size_t i = 0; i < d.strings.size(); ++i) {
        if (separator && i) c.symbols.push_back(*separator);
        c.symbols.insert(c.symbols.end(), d.strings[i].begin(), d.strings[i].end());
    }
    return c;
}

void write_dataset(const Dataset& d, const Alphabet& alphabet, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << "# grammar-fingerprint: " << d.grammar_fingerprint << "\n";
    out << "# seed: " << d.seed << "\n";
    out << "# plan: min=" << d.plan.min_len << " max=" << d.plan.max_len
        << " count=" << d.plan.count << "\n";
    for (const auto& s : d.strings) {
        out << alphabet.decode(s) << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> read_dataset_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace spk
