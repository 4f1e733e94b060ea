#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spk/errors.hpp"

namespace spk {

/// Frequencies of observed categories only; every entry is >= 1.
struct CountVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    std::size_t observed() const { return counts.size(); }
};

enum class Estimator { Grassberger, Plugin };

Estimator parse_estimator(const std::string& name);

/// Digamma at positive integer n: psi(n) = -gamma + H_{n-1}. Exact harmonic
/// sums below 10^6, asymptotic expansion above (error < 1e-40 there).
double digamma_int(std::uint64_t n);

/// Grassberger-corrected entropy in nats: ln N - (1/N) sum N_i psi(N_i).
double entropy_grassberger(const CountVector& c);

/// Plug-in (maximum likelihood) entropy in nats.
double entropy_plugin(const CountVector& c);

/// Mutual-information curve: one (distance, bits) entry per D.
struct LddProfile {
    std::vector<double> mi_bits;  // index 0 holds D=1

    std::size_t max_distance() const { return mi_bits.size(); }
};

/// Symbol sequence with densely remapped category ids.
class ProfiledCorpus {
public:
    /// Remaps arbitrary bytes to dense ids over the observed categories.
    static ProfiledCorpus from_bytes(const std::string& bytes);
    /// Adopts already-dense ids (e.g. a flattened generated corpus).
    static ProfiledCorpus from_ids(std::vector<std::uint8_t> ids, std::size_t category_count);

    std::size_t size() const { return data_.size(); }
    std::size_t categories() const { return categories_; }
    const std::vector<std::uint8_t>& data() const { return data_; }

private:
    std::vector<std::uint8_t> data_;
    std::size_t categories_ = 0;
};

/// I(X;Y) in bits between symbols D apart: X = corpus[0 : L-D] paired with
/// Y = corpus[D : L], three entropies via the chosen estimator.
double mi_at_distance(const ProfiledCorpus& corpus, std::size_t distance, Estimator est);

/// mi_at_distance for every D in 1..max_distance. Parallel across distances;
/// output is identical at any thread count.
LddProfile ldd_profile(const ProfiledCorpus& corpus, std::size_t max_distance, Estimator est,
                       unsigned threads = 1);

/// CSV with header `D,mi_bits`, 17 significant digits. When log_floor > 0,
/// values below the floor are clamped to it (log-log plot data).
std::string profile_to_csv(const LddProfile& profile, double log_floor = 0.0);

}  // namespace spk
