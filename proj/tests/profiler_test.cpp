#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <algorithm>
#include <numbers>
#include <random>

#include "naive_profile.hpp"
#include "spk/profiler.hpp"

using namespace spk;

TEST_CASE("digamma_int agrees with an independent series implementation") {
    for (std::uint64_t n : {1ull, 2ull, 3ull, 10ull, 100ull, 999'999ull, 1'000'000ull,
                            1'000'001ull, 50'000'000ull}) {
        CHECK(digamma_int(n) ==
              doctest::Approx(boost::math::digamma(static_cast<double>(n))).epsilon(1e-13));
    }
    CHECK(digamma_int(1) == doctest::Approx(-std::numbers::egamma).epsilon(1e-15));
    CHECK_THROWS_AS(digamma_int(0), ParseError);
}

TEST_CASE("entropy_grassberger matches hand-derived values") {
    CHECK(entropy_grassberger({{10}}) ==
          doctest::Approx(std::log(10.0) - boost::math::digamma(10.0)).epsilon(1e-12));
    CHECK(entropy_grassberger({{10}}) == doctest::Approx(0.050843).epsilon(1e-4));
    CHECK(entropy_grassberger({{5, 5}}) == doctest::Approx(0.796468).epsilon(1e-5));
    // Grassberger corrects the plug-in's downward bias.
    CHECK(entropy_grassberger({{5, 5}}) > std::numbers::ln2);
    CHECK(entropy_grassberger({{1}}) == doctest::Approx(std::numbers::egamma).epsilon(1e-14));
    CHECK_THROWS_AS(entropy_grassberger({}), ParseError);
}

TEST_CASE("entropy_plugin matches hand-derived values") {
    CHECK(entropy_plugin({{5, 5}}) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(entropy_plugin({{10}}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(entropy_plugin({{1, 1, 2}}) == doctest::Approx(1.039721).epsilon(1e-5));
}

TEST_CASE("estimators converge on well-sampled count vectors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t k = 2 + rng() % 8;
        CountVector c;
        for (std::size_t i = 0; i < k; ++i) {
            c.counts.push_back(100 * k + rng() % (100 * k));
        }
        double diff = std::abs(entropy_grassberger(c) - entropy_plugin(c));
        CHECK(diff <= static_cast<double>(k) / static_cast<double>(c.total()));
    }
}

TEST_CASE("mi_at_distance on a perfectly periodic corpus") {
    std::string bytes;
    for (int i = 0; i < 500; ++i) bytes += "ab";
    auto corpus = ProfiledCorpus::from_bytes(bytes);
    // At D=2, X and Y are pointwise equal; plug-in MI is H(X) = 1 bit.
    CHECK(mi_at_distance(corpus, 2, Estimator::Plugin) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mi_at_distance edge cases") {
    auto tiny = ProfiledCorpus::from_bytes("ab");
    CHECK(mi_at_distance(tiny, 1, Estimator::Plugin) == doctest::Approx(0.0));
    CHECK(std::isfinite(mi_at_distance(tiny, 1, Estimator::Grassberger)));
    CHECK_THROWS_AS(mi_at_distance(tiny, 2, Estimator::Plugin), ParseError);
    auto one = ProfiledCorpus::from_bytes("a");
    CHECK_THROWS_AS(mi_at_distance(one, 1, Estimator::Plugin), EmptyLanguageError);
}

TEST_CASE("plug-in MI is non-negative and bounded by the marginals") {
    std::mt19937_64 rng(17);
    std::string bytes;
    for (int i = 0; i < 5000; ++i) bytes += static_cast<char>('a' + rng() % 4);
    auto corpus = ProfiledCorpus::from_bytes(bytes);
    for (std::size_t d = 1; d <= 20; ++d) {
        double mi = mi_at_distance(corpus, d, Estimator::Plugin);
        CHECK(mi >= 0.0);
        CHECK(mi <= 2.0 + 1e-12);  // marginal entropy over 4 symbols
    }
}

TEST_CASE("MI is invariant under corpus reversal") {
    std::mt19937_64 rng(23);
    std::string bytes;
    for (int i = 0; i < 3000; ++i) bytes += static_cast<char>('a' + rng() % 3);
    std::string reversed(bytes.rbegin(), bytes.rend());
    auto fwd = ProfiledCorpus::from_bytes(bytes);
    auto rev = ProfiledCorpus::from_bytes(reversed);
    for (std::size_t d : {1, 2, 7, 50}) {
        CHECK(mi_at_distance(fwd, d, Estimator::Grassberger) ==
              doctest::Approx(mi_at_distance(rev, d, Estimator::Grassberger)).epsilon(1e-12));
    }
}

TEST_CASE("production profiler matches the naive transliteration") {
    std::mt19937_64 rng(31);
    std::vector<std::uint8_t> data(4000);
    std::string bytes;
    for (auto& b : data) {
        b = static_cast<std::uint8_t>(rng() % 5);
        bytes += static_cast<char>('a' + b);
    }
    auto corpus = ProfiledCorpus::from_bytes(bytes);
    for (std::size_t d : {1, 3, 17, 100}) {
        CHECK(mi_at_distance(corpus, d, Estimator::Grassberger) ==
              doctest::Approx(naive::mi_at_distance(data, 5, d, true)).epsilon(1e-12));
        CHECK(mi_at_distance(corpus, d, Estimator::Plugin) ==
              doctest::Approx(naive::mi_at_distance(data, 5, d, false)).epsilon(1e-12));
    }
}

TEST_CASE("ldd_profile is dense in D and thread-count independent") {
    std::mt19937_64 rng(41);
    std::string bytes;
    for (int i = 0; i < 2000; ++i) bytes += static_cast<char>('a' + rng() % 3);
    auto corpus = ProfiledCorpus::from_bytes(bytes);

    LddProfile seq = ldd_profile(corpus, 64, Estimator::Grassberger, 1);
    LddProfile par = ldd_profile(corpus, 64, Estimator::Grassberger, 8);
    REQUIRE(seq.max_distance() == 64);
    CHECK(seq.mi_bits == par.mi_bits);
    CHECK(seq.mi_bits[0] == mi_at_distance(corpus, 1, Estimator::Grassberger));
    CHECK_THROWS_AS(ldd_profile(corpus, 2000, Estimator::Grassberger), ParseError);
}

TEST_CASE("profile CSV preserves raw values and clamps only with a floor") {
    LddProfile p;
    p.mi_bits = {0.5, -2e-7, 1e-3};
    std::string raw = profile_to_csv(p);
    CHECK(raw.find("D,mi_bits\n") == 0);
    CHECK(raw.find("2,-") != std::string::npos);  // negative preserved

    std::string clamped = profile_to_csv(p, 1e-6);
    CHECK(clamped.find("2,-") == std::string::npos);
    CHECK(clamped.find("2,9.99999") != std::string::npos);  // clamped to the floor
}
