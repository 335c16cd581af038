#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nsimon/distribution.hpp"
#include "nsimon/multiset.hpp"

namespace nsimon {

Distribution::Distribution(int n) : n_(n) {
    if (n < 0 || n > kMaxBits) throw CapacityError("distribution over more than 2^24 outcomes");
    p_.assign(std::size_t{1} << n, 0.0);
}

Distribution::Distribution(int n, std::vector<double> probabilities) : Distribution(n) {
    if (probabilities.size() != p_.size()) throw DimensionError("probability vector has wrong size");
    p_ = std::move(probabilities);
}

double Distribution::at(const BitVec& y) const {
    if (y.size() != n_) throw DimensionError("outcome length differs from distribution");
    return p_[y.word()];
}

double Distribution::total() const { return std::accumulate(p_.begin(), p_.end(), 0.0); }

void Distribution::check_normalized(double tol) const {
    for (double v : p_) {
        if (!(v >= 0.0)) throw RangeError("negative or NaN probability");
    }
    if (std::abs(total() - 1.0) > tol) throw RangeError("probabilities do not sum to 1");
}

// ---------------------------------------------------------------------------

std::uint64_t MeasurementMultiset::count(const BitVec& y) const {
    auto it = counts_.find(y);
    return it == counts_.end() ? 0 : it->second;
}

void MeasurementMultiset::add(const BitVec& y, std::uint64_t times) {
    if (y.size() != n_) throw DimensionError("outcome length differs from multiset");
    if (times == 0) return;
    counts_[y] += times;
    total_ += times;
}

void MeasurementMultiset::merge(const MeasurementMultiset& other) {
    if (other.n_ != n_) throw DimensionError("merging multisets of different lengths");
    for (const auto& [y, c] : other.counts_) add(y, c);
}

void write_multiset_csv(std::ostream& out, const MeasurementMultiset& m) {
    out << "outcome,count\n";
    for (const auto& [y, c] : m.counts()) out << y.to_string() << ',' << c << '\n';
}

MeasurementMultiset read_multiset_csv(std::istream& in) {
    std::string line;
    bool header = false;
    int n = -1;
    MeasurementMultiset m;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "outcome,count") throw ParseError("expected header 'outcome,count'");
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("malformed multiset row: " + line);
        const BitVec y = BitVec::parse(line.substr(0, comma));
        std::uint64_t c = 0;
        std::istringstream(line.substr(comma + 1)) >> c;
        if (n < 0) {
            n = y.size();
            m = MeasurementMultiset(n);
        }
        m.add(y, c);
    }
    if (!header) throw ParseError("missing multiset header");
    return m;
}

}  // namespace nsimon
