#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>

#include <boost/math/distributions/chi_squared.hpp>

#include "nsimon/lsn.hpp"
#include "nsimon/stats.hpp"

namespace nsimon {

namespace {

void check_same_space(const Distribution& p, const Distribution& q) {
    if (p.n() != q.n()) throw DimensionError("distributions over different outcome spaces");
}

}  // namespace

double kl_divergence(const Distribution& p, const Distribution& q) {
    check_same_space(p, q);
    double kl = 0.0;
    for (std::uint64_t y = 0; y < p.size(); ++y) {
        if (p[y] == 0.0) continue;
        if (q[y] == 0.0) throw DivergenceError("KL divergence is infinite: support of P exceeds Q");
        kl += p[y] * std::log2(p[y] / q[y]);
    }
    return std::max(0.0, kl);
}

double kolmogorov_distance(const Distribution& p, const Distribution& q) {
    check_same_space(p, q);
    double d = 0.0;
    for (std::uint64_t y = 0; y < p.size(); ++y) d = std::max(d, std::abs(p[y] - q[y]));
    return d;
}

double total_variation(const Distribution& p, const Distribution& q) {
    check_same_space(p, q);
    double d = 0.0;
    for (std::uint64_t y = 0; y < p.size(); ++y) d += std::abs(p[y] - q[y]);
    return d / 2.0;
}

Distribution empirical_distribution(const MeasurementMultiset& m) {
    if (m.empty()) throw EmptyError("empirical distribution of an empty multiset");
    Distribution d(m.n());
    const double total = static_cast<double>(m.total());
    for (const auto& [y, c] : m.counts()) d[y.word()] = static_cast<double>(c) / total;
    return d;
}

QualityRow quality_report(const MeasurementMultiset& m, const BitVec& s) {
    QualityRow r;
    r.tau = estimate_tau(m, s);
    const Distribution model = model_distribution(LsnParams(s, r.tau));
    const Distribution emp = empirical_distribution(m);
    r.kl = kl_divergence(emp, model);
    r.kolmogorov = kolmogorov_distance(emp, model);
    return r;
}

void write_quality_csv(std::ostream& out, const std::vector<NamedQualityRow>& rows) {
    out << "technique,KL,K,tau\n";
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(8) << std::fixed;
    for (const auto& r : rows) {
        out << r.technique << ',' << r.row.kl << ',' << r.row.kolmogorov << ',' << r.row.tau << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed, const std::vector<double>& expected) {
    if (observed.size() != expected.size()) throw DimensionError("observed and expected cell counts differ");
    const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    if (total == 0.0) throw EmptyError("chi-square test without observations");
    ChiSquareResult r;
    int cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) {
            if (observed[i] > 0) {
                r.statistic = std::numeric_limits<double>::infinity();
                r.p_value = 0.0;
                return r;
            }
            continue;
        }
        const double e = expected[i] * total;
        const double diff = static_cast<double>(observed[i]) - e;
        r.statistic += diff * diff / e;
        ++cells;
    }
    r.dof = std::max(1, cells - 1);
    const boost::math::chi_squared dist(r.dof);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

}  // namespace nsimon
