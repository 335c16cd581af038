#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"

#include "nsimon/gf2_matrix.hpp"
#include "nsimon/solvers.hpp"

using namespace nsimon;

namespace {

std::vector<BitVec> closure(const std::vector<BitVec>& points, int n) {
    std::set<BitVec> d{BitVec::zero(n)};
    for (const auto& p : points) {
        for (const auto& q : points) d.insert(p + q);
    }
    return {d.begin(), d.end()};
}

BitVec random_period(int n, Rng& rng) {
    std::uint64_t w = 0;
    while (w == 0) w = rng() & low_mask(n);
    return BitVec(n, w);
}

std::vector<BitVec> lsn_pool(const LsnParams& p, std::size_t size, Rng& rng) {
    const LsnSampler sampler(p);
    std::vector<BitVec> pool(size);
    for (auto& y : pool) y = sampler(rng);
    return pool;
}

}  // namespace

TEST_SUITE("solvers") {
    TEST_CASE("period in dimension one needs no query loop") {
        const auto r = classical_period(SimonFunction::with_period(BitVec::parse("1")));
        REQUIRE(r.s.has_value());
        CHECK(*r.s == BitVec::parse("1"));
        CHECK(r.cost.loops == 0);
    }

    TEST_CASE("period finds every s, n <= 5 exhaustive and random n <= 10") {
        for (int n = 1; n <= 5; ++n) {
            for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
                const auto r = classical_period(SimonFunction::with_period(BitVec(n, w)));
                REQUIRE(r.s.has_value());
                CHECK(*r.s == BitVec(n, w));
            }
        }
        Rng rng = make_stream(91, 0);
        for (int k = 0; k < 300; ++k) {
            const int n = 6 + static_cast<int>(rng() % 5);
            const BitVec s = random_period(n, rng);
            const auto r = classical_period(SimonFunction::with_period(s));
            REQUIRE(r.s.has_value());
            CHECK(*r.s == s);
            CHECK(r.cost.queries == r.cost.loops + 1);
        }
        CHECK_THROWS_AS(PeriodFinder(SimonFunction::with_period(BitVec(17, 1))), CapacityError);
    }

    TEST_CASE("distance set is the pairwise closure of the queried points") {
        Rng rng = make_stream(92, 0);
        for (int k = 0; k < 60; ++k) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const SimonFunction f = SimonFunction::with_period(random_period(n, rng));
            PeriodFinder finder(f);
            CHECK(finder.distances() == closure(finder.queried(), n));
            while (!finder.done()) {
                finder.step();
                if (finder.done()) break;
                CHECK(finder.distances() == closure(finder.queried(), n));
                for (const auto& d : finder.distances()) CHECK(finder.excluded(d.word()));
            }
        }
    }

    TEST_CASE("incremental and full-scan argmax agree, n <= 8") {
        Rng rng = make_stream(93, 0);
        for (int n = 1; n <= 8; ++n) {
            const int count = n <= 5 ? (1 << n) - 1 : 25;
            for (int k = 0; k < count; ++k) {
                const BitVec s = n <= 5 ? BitVec(n, static_cast<std::uint64_t>(k + 1)) : random_period(n, rng);
                const SimonFunction f = SimonFunction::with_period(s);
                PeriodFinder a(f, PeriodFinder::Strategy::Incremental);
                PeriodFinder b(f, PeriodFinder::Strategy::FullScan);
                while (!a.done() && !b.done()) CHECK(a.step() == b.step());
                CHECK(a.done() == b.done());
                CHECK(a.result() == b.result());
                CHECK(a.cost().loops == b.cost().loops);
            }
        }
    }

    TEST_CASE("mean period loops grow with n") {
        double previous = 0.0;
        for (int n = 1; n <= 9; ++n) {
            double total = 0.0;
            for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
                total += static_cast<double>(classical_period(SimonFunction::with_period(BitVec(n, w))).cost.loops);
            }
            const double mean = total / static_cast<double>((std::uint64_t{1} << n) - 1);
            CHECK(mean >= previous);
            previous = mean;
            if (n == 2) CHECK(mean == doctest::Approx(5.0 / 3.0));
        }
    }

    TEST_CASE("pooled lsn on a clean basis takes one loop") {
        Rng rng = make_stream(94, 0);
        const SimonFunction f = SimonFunction::standard(7);
        const auto basis = orthogonal_basis(f.period()).rows();
        const auto r = pooled_lsn(f, basis, rng);
        REQUIRE(r.s.has_value());
        CHECK(*r.s == f.period());
        CHECK(r.cost.loops == 1);
        CHECK_THROWS_AS(pooled_lsn(f, std::span<const BitVec>(basis.data(), 5), rng), RangeError);
    }

    TEST_CASE("pooled lsn solves randomized instances and checks every return") {
        Rng rng = make_stream(95, 0);
        for (int t = 0; t < 300; ++t) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const double tau = 0.3 * std::generate_canonical<double, 53>(rng);
            const SimonFunction f = SimonFunction::with_period(random_period(n, rng));
            const auto pool = lsn_pool(LsnParams(f.period(), tau), static_cast<std::size_t>(40 * n * n), rng);
            int rejected = 0;
            const Verifier verify = [&](const BitVec& c) {
                const bool ok = !c.is_zero() && f.verify_period(c);
                rejected += !ok;
                return ok;
            };
            const auto r = pooled_lsn(n, pool, verify, rng);
            REQUIRE(r.s.has_value());
            CHECK(*r.s == f.period());
            CHECK(f.verify_period(*r.s));
        }
        const auto pool = lsn_pool(LsnParams(BitVec(5, 3), 0.2), 100, rng);
        const auto none = pooled_lsn(5, pool, [](const BitVec&) { return false; }, rng, 50);
        CHECK_FALSE(none.s.has_value());
        CHECK(none.cost.loops == 50);
    }

    TEST_CASE("pooled lsn loops match the closed form, n <= 7") {
        Rng rng = make_stream(96, 0);
        for (int n = 2; n <= 7; ++n) {
            const double tau = 0.12;
            const SimonFunction f = SimonFunction::standard(n);
            const auto pool = lsn_pool(LsnParams(f.period(), tau), 400000, rng);
            double total = 0.0;
            const int trials = 20000;
            for (int t = 0; t < trials; ++t) total += static_cast<double>(pooled_lsn(f, pool, rng).cost.loops);
            CHECK(total / trials == doctest::Approx(expected_pooled_lsn_loops(n, tau)).epsilon(0.03));
        }
    }

    TEST_CASE("pooled gauss") {
        Rng rng = make_stream(97, 0);
        // A pool of exactly n independent clean samples: one iteration.
        const BitVec s(10, 0x1CB);
        std::vector<LpnSample> clean;
        for (int i = 0; i < 10; ++i) {
            const BitVec a = BitVec::unit(10, i);
            clean.push_back({a, inner_product(a, s)});
        }
        const Verifier is_s = [&](const BitVec& c) { return c == s; };
        const auto one = pooled_gauss_lpn(10, clean, is_s, rng);
        REQUIRE(one.s.has_value());
        CHECK(*one.s == s);
        CHECK(one.cost.loops == 1);
        CHECK_THROWS_AS(pooled_gauss_lpn(10, std::span<const LpnSample>(clean.data(), 9), is_s, rng), RangeError);

        // Per-iteration success rate at n = 12, tau = 0.1.
        const int n = 12;
        const double tau = 0.1;
        const LpnParams params(BitVec(n, 0xA5C), tau);
        const LpnSampler sampler(params);
        std::vector<LpnSample> pool(200000);
        for (auto& x : pool) x = sampler(rng);
        const Verifier verify = [&](const BitVec& c) { return c == params.s; };
        double loops = 0.0;
        const int trials = 10000;
        for (int t = 0; t < trials; ++t) {
            const auto r = pooled_gauss_lpn(n, pool, verify, rng);
            REQUIRE(r.s.has_value());
            loops += static_cast<double>(r.cost.loops);
        }
        const double rate = trials / loops;
        CHECK(rate == doctest::Approx(pooled_gauss_success_probability(n, tau)).epsilon(0.10));
    }

    TEST_CASE("pooled gauss against pooled lsn through the lpn-to-lsn transform") {
        // Gauss needs n clean independent samples, Pooled LSN n-1, so the
        // mean loop ratio is (1 - tau)(1 - 2^-n).
        Rng rng = make_stream(98, 0);
        const int n = 8;
        const double tau = 0.1;
        const LpnParams params(BitVec(n, 0x6D), tau);
        const BitVec z(n, 1);
        REQUIRE(inner_product(z, params.s));
        const LpnSampler sampler(params);
        std::vector<LpnSample> pool(200000);
        for (auto& x : pool) x = sampler(rng);
        std::vector<BitVec> transformed;
        for (const auto& x : pool) transformed.push_back(lpn_sample_to_lsn(x, z));
        const SimonFunction f = SimonFunction::with_period(params.s);
        double gauss = 0.0;
        double lsn = 0.0;
        const int trials = 20000;
        for (int t = 0; t < trials; ++t) {
            gauss += static_cast<double>(
                pooled_gauss_lpn(n, pool, [&](const BitVec& c) { return c == params.s; }, rng).cost.loops);
            lsn += static_cast<double>(pooled_lsn(f, transformed, rng).cost.loops);
        }
        CHECK(lsn / gauss == doctest::Approx((1 - tau) * (1 - std::ldexp(1.0, -n))).epsilon(0.05));
    }

    TEST_CASE("closed forms and exponents") {
        CHECK(independence_probability(0) == 1.0);
        CHECK(independence_probability(1) == 0.5);
        CHECK(independence_probability(2) == 0.375);
        CHECK(expected_pooled_lsn_loops(2, 0.0) == 2.0);
        CHECK(runtime_exponent_pooled(0.0) == 0.0);
        CHECK(runtime_exponent_wellpooled(0.0) == 0.0);
        CHECK(runtime_exponent_pooled(1.0 - 1.0 / std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(runtime_exponent_pooled(0.292) < 0.5);
        CHECK(runtime_exponent_pooled(0.294) > 0.5);
        CHECK(runtime_exponent_wellpooled(0.4999) < 0.5);
        double a = 0.0;
        double b = 0.0;
        for (int k = 1; k < 500; ++k) {
            const double tau = k / 1000.0;
            CHECK(runtime_exponent_pooled(tau) > a);
            CHECK(runtime_exponent_wellpooled(tau) > b);
            CHECK(runtime_exponent_wellpooled(tau) < runtime_exponent_pooled(tau));
            a = runtime_exponent_pooled(tau);
            b = runtime_exponent_wellpooled(tau);
        }
        CHECK_THROWS_AS(runtime_exponent_pooled(0.5), RangeError);
        CHECK_THROWS_AS(runtime_exponent_wellpooled(-0.1), RangeError);
    }

    TEST_CASE("solver csv") {
        std::stringstream ss;
        write_solver_csv(ss, {{"Period", 3, 0.0, 1.28125, 10000, 1}});
        CHECK(ss.str() == "algorithm,n,tau,mean_log2_loops,trials,seed\nPeriod,3,0.00000,1.28125,10000,1\n");
    }
}
