#include "spk/profiler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <thread>

namespace spk {

std::uint64_t CountVector::total() const {
    std::uint64_t n = 0;
    for (auto c : counts) n += c;
    return n;
}

Estimator parse_estimator(const std::string& name) {
    if (name == "grassberger") return Estimator::Grassberger;
    if (name == "plugin") return Estimator::Plugin;
    throw ParseError("unknown estimator: " + name);
}

namespace {

constexpr std::uint64_t kHarmonicTableSize = 1'000'000;
std::vector<double> harmonic_table;  // harmonic_table[n] = H_n
std::once_flag harmonic_once;

void build_harmonic_table() {
    harmonic_table.resize(kHarmonicTableSize + 1);
    harmonic_table[0] = 0.0;
    for (std::uint64_t n = 1; n <= kHarmonicTableSize; ++n) {
        harmonic_table[n] = harmonic_table[n - 1] + 1.0 / static_cast<double>(n);
    }
}

}  // namespace

double digamma_int(std::uint64_t n) {
    if (n == 0) throw ParseError("digamma undefined at 0");
    if (n <= kHarmonicTableSize) {
        std::call_once(harmonic_once, build_harmonic_table);
        return -std::numbers::egamma + harmonic_table[n - 1];
    }
    // psi(n) ~ ln n - 1/2n - 1/12n^2 + 1/120n^4 - 1/252n^6; the truncation
    // error at n > 10^6 is below 1e-40.
    double x = static_cast<double>(n);
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    return std::log(x) - 0.5 * inv -
           inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
}

double entropy_grassberger(const CountVector& c) {
    if (c.counts.empty()) throw ParseError("empty count vector");
    std::uint64_t n = c.total();
    double acc = 0.0;
    for (std::uint64_t ni : c.counts) {
        acc += static_cast<double>(ni) * digamma_int(ni);
    }
    return std::log(static_cast<double>(n)) - acc / static_cast<double>(n);
}

double entropy_plugin(const CountVector& c) {
    if (c.counts.empty()) throw ParseError("empty count vector");
    double n = static_cast<double>(c.total());
    double acc = 0.0;
    for (std::uint64_t ni : c.counts) {
        double p = static_cast<double>(ni) / n;
        acc -= p * std::log(p);
    }
    return acc;
}

ProfiledCorpus ProfiledCorpus::from_bytes(const std::string& bytes) {
    std::array<int, 256> remap;
    remap.fill(-1);
    ProfiledCorpus c;
    c.data_.reserve(bytes.size());
    for (unsigned char b : bytes) {
        if (remap[b] < 0) {
            remap[b] = static_cast<int>(c.categories_++);
        }
        c.data_.push_back(static_cast<std::uint8_t>(remap[b]));
    }
    return c;
}

ProfiledCorpus ProfiledCorpus::from_ids(std::vector<std::uint8_t> ids, std::size_t category_count) {
    ProfiledCorpus c;
    c.data_ = std::move(ids);
    c.categories_ = category_count;
    return c;
}

namespace {

double mi_with_buffer(const ProfiledCorpus& corpus, std::size_t distance, Estimator est,
                      std::vector<std::uint32_t>& joint) {
    const std::size_t len = corpus.size();
    const std::size_t cats = corpus.categories();
    const std::size_t pairs = len - distance;
    const std::uint8_t* data = corpus.data().data();

    std::fill(joint.begin(), joint.end(), 0u);
    for (std::size_t i = 0; i < pairs; ++i) {
        ++joint[static_cast<std::size_t>(data[i]) * cats + data[i + distance]];
    }

    // Marginals are the joint's row and column sums; no second pass needed.
    CountVector x_counts, y_counts, xy_counts;
    std::vector<std::uint64_t> col_sums(cats, 0);
    for (std::size_t x = 0; x < cats; ++x) {
        std::uint64_t row = 0;
        for (std::size_t y = 0; y < cats; ++y) {
            std::uint32_t c = joint[x * cats + y];
            if (c) xy_counts.counts.push_back(c);
            row += c;
            col_sums[y] += c;
        }
        if (row) x_counts.counts.push_back(row);
    }
    for (std::uint64_t c : col_sums) {
        if (c) y_counts.counts.push_back(c);
    }

    auto entropy = (est == Estimator::Grassberger) ? entropy_grassberger : entropy_plugin;
    double nats = entropy(x_counts) + entropy(y_counts) - entropy(xy_counts);
    return nats / std::numbers::ln2;
}

}  // namespace

double mi_at_distance(const ProfiledCorpus& corpus, std::size_t distance, Estimator est) {
    if (corpus.size() < 2) throw EmptyLanguageError("corpus shorter than 2 symbols");
    if (distance < 1 || distance >= corpus.size()) {
        throw ParseError("distance " + std::to_string(distance) + " out of range for corpus of " +
                         std::to_string(corpus.size()) + " symbols");
    }
    std::vector<std::uint32_t> joint(corpus.categories() * corpus.categories());
    return mi_with_buffer(corpus, distance, est, joint);
}

LddProfile ldd_profile(const ProfiledCorpus& corpus, std::size_t max_distance, Estimator est,
                       unsigned threads) {
    if (corpus.size() < 2) throw EmptyLanguageError("corpus shorter than 2 symbols");
    if (max_distance < 1 || max_distance >= corpus.size()) {
        throw ParseError("max distance " + std::to_string(max_distance) +
                         " out of range for corpus of " + std::to_string(corpus.size()) +
                         " symbols");
    }
    LddProfile profile;
    profile.mi_bits.resize(max_distance);

    auto worker = [&](std::size_t first_d, std::size_t stride) {
        std::vector<std::uint32_t> joint(corpus.categories() * corpus.categories());
        for (std::size_t d = first_d; d <= max_distance; d += stride) {
            profile.mi_bits[d - 1] = mi_with_buffer(corpus, d, est, joint);
        }
    };
    if (threads <= 1 || max_distance < 2 * threads) {
        worker(1, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t + 1, threads);
        for (auto& th : pool) th.join();
    }
    return profile;
}

std::string profile_to_csv(const LddProfile& profile, double log_floor) {
    std::string out = "D,mi_bits\n";
    char buf[64];
    for (std::size_t d = 1; d <= profile.max_distance(); ++d) {
        double v = profile.mi_bits[d - 1];
        if (log_floor > 0.0 && v < log_floor) v = log_floor;
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", d, v);
        out += buf;
    }
    return out;
}

}  // namespace spk
