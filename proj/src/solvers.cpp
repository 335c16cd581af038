#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "nsimon/gf2_matrix.hpp"
#include "nsimon/solvers.hpp"

namespace nsimon {

PeriodFinder::PeriodFinder(const SimonFunction& f, Strategy strategy)
    : f_(f), strategy_(strategy), n_(f.n()) {
    if (n_ > kMaxBits) throw CapacityError("classical period finding supports n <= 16");
    const std::size_t size = std::size_t{1} << n_;
    in_p_.assign(size, false);
    in_d_.assign(size, false);
    cnt_.assign(size, 0);
    if (strategy_ == Strategy::Incremental) {
        buckets_.resize(2);
        for (std::uint64_t x = 0; x < size; ++x) buckets_[0].insert(buckets_[0].end(), x);
    }

    // P = {(0, f(0))}, D = {0}.
    const BitVec zero = BitVec::zero(n_);
    image_.emplace(f_.eval(zero).word(), 0);
    cost_.queries = 1;
    points_.push_back(zero);
    in_p_[0] = true;
    if (strategy_ == Strategy::Incremental) buckets_[0].erase(0);
    add_distance(0);
    finish_if_exhausted();
}

void PeriodFinder::move_count(std::uint64_t x) {
    if (strategy_ == Strategy::Incremental && !in_p_[x]) {
        buckets_[cnt_[x]].erase(x);
        if (cnt_[x] + 2 > buckets_.size()) buckets_.resize(cnt_[x] + 2);
        buckets_[cnt_[x] + 1].insert(x);
    }
    ++cnt_[x];
}

void PeriodFinder::add_distance(std::uint64_t d) {
    in_d_[d] = true;
    d_list_.push_back(d);
    for (const auto& p : points_) move_count(p.word() ^ d);
}

void PeriodFinder::finish_if_exhausted() {
    const std::size_t size = std::size_t{1} << n_;
    if (d_list_.size() + 1 != size) return;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (!in_d_[x]) {
            result_ = BitVec(n_, x);
            return;
        }
    }
}

// Queried points are never selected again: they cannot produce a collision.
std::uint64_t PeriodFinder::select() const {
    if (strategy_ == Strategy::Incremental) {
        for (const auto& bucket : buckets_) {
            if (!bucket.empty()) return *bucket.begin();
        }
        throw std::logic_error("every point queried without a collision");
    }
    const std::size_t size = std::size_t{1} << n_;
    std::uint64_t best = size;
    std::size_t best_score = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (in_p_[x]) continue;
        std::size_t score = 0;
        for (std::uint64_t d : d_list_) score += !in_p_[x ^ d];
        if (best == size || score > best_score) {
            best = x;
            best_score = score;
        }
    }
    if (best == size) throw std::logic_error("every point queried without a collision");
    return best;
}

BitVec PeriodFinder::step() {
    if (done()) throw std::logic_error("period already found");
    const std::uint64_t x = select();
    const BitVec bx(n_, x);
    const std::uint64_t y = f_.eval(bx).word();
    ++cost_.loops;
    ++cost_.queries;

    if (auto it = image_.find(y); it != image_.end()) {
        result_ = BitVec(n_, x ^ it->second);
        return bx;
    }
    image_.emplace(y, x);
    const std::vector<BitVec> before = points_;
    points_.push_back(bx);
    in_p_[x] = true;
    if (strategy_ == Strategy::Incremental) buckets_[cnt_[x]].erase(x);
    for (std::uint64_t d : d_list_) move_count(x ^ d);
    for (const auto& p : before) {
        const std::uint64_t d = x ^ p.word();
        if (!in_d_[d]) add_distance(d);
    }
    finish_if_exhausted();
    return bx;
}

SolveResult PeriodFinder::run() {
    while (!done()) step();
    return {result_, cost_};
}

std::vector<BitVec> PeriodFinder::distances() const {
    std::vector<BitVec> out;
    for (std::uint64_t d : d_list_) out.emplace_back(n_, d);
    std::sort(out.begin(), out.end());
    return out;
}

SolveResult classical_period(const SimonFunction& f) { return PeriodFinder(f).run(); }

namespace {

// k distinct indices below `size`, uniformly (Floyd's algorithm).
void draw_distinct(std::size_t size, std::size_t k, Rng& rng, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t j = size - k; j < size; ++j) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
        out.push_back(std::find(out.begin(), out.end(), t) == out.end() ? t : j);
    }
}

}  // namespace

SolveResult pooled_lsn(int n, std::span<const BitVec> pool, const Verifier& verify, Rng& rng,
                       std::uint64_t max_loops) {
    if (n < 1) throw DimensionError("Pooled LSN needs n >= 1");
    const auto k = static_cast<std::size_t>(n - 1);
    if (pool.size() < k) throw RangeError("pool holds fewer than n - 1 samples");
    SolveResult r;
    std::vector<std::size_t> idx;
    EchelonBasis basis(n);
    while (r.cost.loops < max_loops) {
        ++r.cost.loops;
        draw_distinct(pool.size(), k, rng, idx);
        basis.clear();
        Gf2Matrix y(n);
        bool independent = true;
        for (std::size_t i : idx) {
            if (pool[i].size() != n) throw DimensionError("pool sample length differs from n");
            if (!basis.insert(pool[i])) {
                independent = false;
                break;
            }
            y.append(pool[i]);
        }
        if (!independent) continue;
        const BitVec candidate = nullspace_period(y);
        ++r.cost.queries;
        if (verify(candidate)) {
            r.s = candidate;
            return r;
        }
    }
    return r;
}

SolveResult pooled_lsn(const SimonFunction& f, std::span<const BitVec> pool, Rng& rng, std::uint64_t max_loops) {
    return pooled_lsn(
        f.n(), pool, [&f](const BitVec& c) { return !c.is_zero() && f.verify_period(c); }, rng, max_loops);
}

SolveResult pooled_gauss_lpn(int n, std::span<const LpnSample> pool, const Verifier& verify, Rng& rng,
                             std::uint64_t max_iterations) {
    if (n < 1 || n > BitVec::kMaxBits) throw DimensionError("Pooled Gauss needs 1 <= n <= 64");
    const auto k = static_cast<std::size_t>(n);
    if (pool.size() < k) throw RangeError("pool holds fewer than n samples");
    SolveResult r;
    std::vector<std::size_t> idx;
    std::vector<BitVec> rows(k);
    bool labels[BitVec::kMaxBits] = {};
    while (r.cost.loops < max_iterations) {
        ++r.cost.loops;
        draw_distinct(pool.size(), k, rng, idx);
        for (std::size_t j = 0; j < k; ++j) {
            if (pool[idx[j]].a.size() != n) throw DimensionError("pool sample length differs from n");
            rows[j] = pool[idx[j]].a;
            labels[j] = pool[idx[j]].b;
        }
        BitVec candidate;
        if (!solve_linear_system(rows, std::span<const bool>(labels, k), candidate)) continue;
        ++r.cost.queries;
        if (!candidate.is_zero() && verify(candidate)) {
            r.s = candidate;
            return r;
        }
    }
    return r;
}

double independence_probability(int k) {
    double q = 1.0;
    for (int j = 1; j <= k; ++j) q *= 1.0 - std::ldexp(1.0, -j);
    return q;
}

double expected_pooled_lsn_loops(int n, double tau) {
    return 1.0 / (std::pow(1.0 - tau, n - 1) * independence_probability(n - 1));
}

double pooled_gauss_success_probability(int n, double tau) {
    return std::pow(1.0 - tau, n) * independence_probability(n);
}

namespace {

void check_tau(double tau) {
    if (!(tau >= 0.0 && tau < 0.5)) throw RangeError("error rate must lie in [0, 1/2)");
}

}  // namespace

double runtime_exponent_pooled(double tau) {
    check_tau(tau);
    return -std::log2(1.0 - tau);
}

double runtime_exponent_wellpooled(double tau) {
    const double c = runtime_exponent_pooled(tau);
    return 1.0 - 1.0 / (1.0 + c);
}

void write_solver_csv(std::ostream& out, const std::vector<SolverRow>& rows) {
    out << "algorithm,n,tau,mean_log2_loops,trials,seed\n";
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed;
    for (const auto& r : rows) {
        out << r.algorithm << ',' << r.n << ',' << std::setprecision(5) << r.tau << ',' << std::setprecision(5)
            << r.mean_log2_loops << ',' << r.trials << ',' << r.seed << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace nsimon
