#include <cmath>
#include <sstream>

#include "doctest.h"

#include "nsimon/lsn.hpp"
#include "nsimon/smoothing.hpp"
#include "nsimon/stats.hpp"

using namespace nsimon;

namespace {

Distribution random_distribution(int n, Rng& rng, bool full_support) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(std::size_t{1} << n);
    double sum = 0.0;
    for (auto& x : p) {
        x = full_support ? 0.05 + u(rng) : (u(rng) < 0.3 ? 0.0 : u(rng));
        sum += x;
    }
    if (sum == 0.0) {
        p[0] = 1.0;
        sum = 1.0;
    }
    for (auto& x : p) x /= sum;
    return Distribution(n, p);
}

}  // namespace

TEST_SUITE("lsn") {
    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(LsnParams(BitVec::zero(3), 0.1), DegenerateError);
        CHECK_THROWS_AS(LsnParams(BitVec::parse("011"), 0.5), RangeError);
        CHECK_THROWS_AS(LsnParams(BitVec::parse("011"), -0.01), RangeError);
        CHECK_NOTHROW(LsnParams(BitVec::parse("011"), 0.0));
    }

    TEST_CASE("noiseless samples are orthogonal") {
        Rng rng = make_stream(61, 0);
        const LsnSampler sampler(LsnParams(BitVec::parse("0110101"), 0.0));
        for (int k = 0; k < 5000; ++k) CHECK_FALSE(inner_product(sampler(rng), sampler.params().s));
    }

    TEST_CASE("model distribution examples") {
        const Distribution d2 = model_distribution(LsnParams(BitVec::parse("11"), 0.25));
        CHECK(d2.at(BitVec::parse("00")) == doctest::Approx(0.375));
        CHECK(d2.at(BitVec::parse("11")) == doctest::Approx(0.375));
        CHECK(d2.at(BitVec::parse("01")) == doctest::Approx(0.125));
        CHECK(d2.at(BitVec::parse("10")) == doctest::Approx(0.125));

        const Distribution d3 = model_distribution(LsnParams(BitVec::parse("011"), 0.1));
        for (const char* y : {"000", "011", "100", "111"}) CHECK(d3.at(BitVec::parse(y)) == doctest::Approx(0.225));
        for (const char* y : {"001", "010", "101", "110"}) CHECK(d3.at(BitVec::parse(y)) == doctest::Approx(0.025));

        const Distribution d0 = model_distribution(LsnParams(BitVec::parse("0101"), 0.0));
        for (std::uint64_t y = 0; y < 16; ++y) {
            CHECK(d0[y] == doctest::Approx(inner_product(BitVec(4, y), BitVec::parse("0101")) ? 0.0 : 0.125));
        }

        Rng rng = make_stream(62, 0);
        for (int k = 0; k < 50; ++k) {
            const int n = 1 + static_cast<int>(rng() % 12);
            const BitVec s(n, (rng() & low_mask(n)) | 1u);
            const double tau = 0.49 * std::generate_canonical<double, 53>(rng);
            CHECK(model_distribution(LsnParams(s, tau)).total() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("sampler matches the model") {
        Rng rng = make_stream(63, 0);
        for (int n = 2; n <= 7; ++n) {
            const LsnParams params(SimonFunction::standard(n).period(), 0.11);
            const auto m = sample_multiset(LsnSampler(params), 100000, rng);
            CHECK(total_variation(empirical_distribution(m), model_distribution(params)) < 0.02);
            // tau-hat within three binomial standard deviations.
            CHECK(std::abs(estimate_tau(m, params.s) - params.tau) < 3 * std::sqrt(0.11 * 0.89 / 100000));
        }
    }

    TEST_CASE("estimate_tau") {
        MeasurementMultiset m(3);
        m.add(BitVec::parse("000"), 4);
        m.add(BitVec::parse("011"), 2);
        CHECK(estimate_tau(m, BitVec::parse("011")) == 0.0);
        MeasurementMultiset r(3);
        r.add(BitVec::parse("000"), 8192 - 819);
        r.add(BitVec::parse("001"), 819);
        CHECK(estimate_tau(r, BitVec::parse("011")) == doctest::Approx(819.0 / 8192.0));
        CHECK_THROWS_AS(estimate_tau(MeasurementMultiset(3), BitVec::parse("011")), EmptyError);
        CHECK_THROWS_AS(estimate_tau(m, BitVec::parse("0011")), DimensionError);
    }

    TEST_CASE("complementing model data keeps tau-hat when h(s) is even") {
        Rng rng = make_stream(64, 0);
        const LsnParams params(BitVec::parse("0110011"), 0.2);
        const auto m = sample_multiset(LsnSampler(params), 20000, rng);
        CHECK(estimate_tau(hamming_smooth(m, BitVec::ones(7)), params.s) == estimate_tau(m, params.s));
    }

    TEST_CASE("multiset csv round trip") {
        MeasurementMultiset m(4);
        m.add(BitVec::parse("1010"), 3);
        m.add(BitVec::parse("0001"), 7);
        std::stringstream ss;
        write_multiset_csv(ss, m);
        CHECK(ss.str() == "outcome,count\n0001,7\n1010,3\n");
        std::stringstream in("# meta\noutcome,count\n0001,7\n1010,3\n");
        CHECK(read_multiset_csv(in) == m);
        std::stringstream bad("outcome,count\n0001\n");
        CHECK_THROWS_AS(read_multiset_csv(bad), ParseError);
    }
}

TEST_SUITE("stats") {
    TEST_CASE("kl and kolmogorov examples") {
        const Distribution p(1, {0.75, 0.25});
        const Distribution q(1, {0.5, 0.5});
        CHECK(kl_divergence(p, p) == 0.0);
        CHECK(kl_divergence(p, q) == doctest::Approx(0.75 * std::log2(1.5) + 0.25 * std::log2(0.5)));
        CHECK(kl_divergence(p, q) == doctest::Approx(0.18872).epsilon(1e-4));
        CHECK(kolmogorov_distance(p, q) == doctest::Approx(0.25));
        CHECK(kolmogorov_distance(p, q) == kolmogorov_distance(q, p));
        CHECK(kolmogorov_distance(p, p) == 0.0);
        CHECK(total_variation(p, q) == doctest::Approx(0.25));
        CHECK_THROWS_AS(kl_divergence(Distribution(1, {0.0, 1.0}), Distribution(1, {1.0, 0.0})), DivergenceError);
        CHECK(kl_divergence(Distribution(1, {1.0, 0.0}), q) == doctest::Approx(1.0));
        CHECK_THROWS_AS(kolmogorov_distance(p, Distribution(2, {0.25, 0.25, 0.25, 0.25})), DimensionError);
    }

    TEST_CASE("empirical distribution") {
        MeasurementMultiset m(2);
        m.add(BitVec::parse("00"));
        m.add(BitVec::parse("11"));
        const Distribution d = empirical_distribution(m);
        CHECK(d[0] == 0.5);
        CHECK(d[3] == 0.5);
        CHECK(d.total() == doctest::Approx(1.0));
        MeasurementMultiset one(3);
        one.add(BitVec::parse("101"), 9);
        CHECK(empirical_distribution(one)[5] == 1.0);
        CHECK_THROWS_AS(empirical_distribution(MeasurementMultiset(2)), EmptyError);
    }

    TEST_CASE("quality report") {
        MeasurementMultiset exact(2);
        exact.add(BitVec::parse("00"), 3);
        exact.add(BitVec::parse("11"), 3);
        exact.add(BitVec::parse("01"), 1);
        exact.add(BitVec::parse("10"), 1);
        const QualityRow r = quality_report(exact, BitVec::parse("11"));
        CHECK(r.tau == 0.25);
        CHECK(r.kl == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(r.kolmogorov == doctest::Approx(0.0).epsilon(1e-15));

        Rng rng = make_stream(65, 0);
        const LsnParams params(BitVec::parse("00011"), 0.1);
        const auto m = sample_multiset(LsnSampler(params), 1000000, rng);
        const QualityRow big = quality_report(m, params.s);
        CHECK(big.kl < 0.001);
        CHECK(big.kolmogorov < 0.002);
        const QualityRow again = quality_report(m, params.s);
        CHECK(again.kl == big.kl);
        CHECK(again.kolmogorov == big.kolmogorov);
        CHECK(again.tau == big.tau);
    }

    TEST_CASE("kl is nonnegative and vanishes only at equality") {
        Rng rng = make_stream(66, 0);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 7);
            const Distribution p = random_distribution(n, rng, false);
            const Distribution q = random_distribution(n, rng, true);
            const double kl = kl_divergence(p, q);
            CHECK(kl >= 0.0);
            CHECK((kl < 1e-12) == (kolmogorov_distance(p, q) < 1e-12));
            CHECK(kl_divergence(q, q) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    TEST_CASE("kolmogorov distance is a metric") {
        Rng rng = make_stream(67, 0);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 7);
            const Distribution a = random_distribution(n, rng, false);
            const Distribution b = random_distribution(n, rng, false);
            const Distribution c = random_distribution(n, rng, false);
            CHECK(kolmogorov_distance(a, b) == kolmogorov_distance(b, a));
            CHECK(kolmogorov_distance(a, c) <= kolmogorov_distance(a, b) + kolmogorov_distance(b, c) + 1e-15);
            CHECK(kolmogorov_distance(a, a) == 0.0);
        }
    }

    TEST_CASE("chi-square helper") {
        const auto even = chi_square_test({50, 50}, {0.5, 0.5});
        CHECK(even.statistic == 0.0);
        CHECK(even.dof == 1);
        CHECK(even.p_value == doctest::Approx(1.0));
        const auto skew = chi_square_test({60, 40}, {0.5, 0.5});
        CHECK(skew.statistic == doctest::Approx(4.0));
        CHECK(skew.p_value == doctest::Approx(0.0455003).epsilon(1e-5));
        const auto dropped = chi_square_test({30, 30, 0}, {0.5, 0.5, 0.0});
        CHECK(dropped.dof == 1);
        CHECK(dropped.p_value == doctest::Approx(1.0));
        CHECK(chi_square_test({30, 30, 1}, {0.5, 0.5, 0.0}).p_value == 0.0);
        CHECK_THROWS_AS(chi_square_test({1, 2}, {1.0}), DimensionError);
        CHECK_THROWS_AS(chi_square_test({0, 0}, {0.5, 0.5}), EmptyError);
    }

    TEST_CASE("quality csv") {
        std::stringstream ss;
        write_quality_csv(ss, {{"none", {0.5, 0.25, 0.125}}});
        CHECK(ss.str() == "technique,KL,K,tau\nnone,0.50000000,0.25000000,0.12500000\n");
    }
}
