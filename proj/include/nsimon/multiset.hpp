#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "nsimon/bitvec.hpp"

namespace nsimon {

/// Counted multiset of length-n outcomes.
class MeasurementMultiset {
public:
    explicit MeasurementMultiset(int n = 0) : n_(n) {}

    int n() const { return n_; }
    std::uint64_t total() const { return total_; }
    bool empty() const { return total_ == 0; }
    const std::map<BitVec, std::uint64_t>& counts() const { return counts_; }
    std::uint64_t count(const BitVec& y) const;

    void add(const BitVec& y, std::uint64_t times = 1);
    /// Multiset union (counts add).
    void merge(const MeasurementMultiset& other);

    friend bool operator==(const MeasurementMultiset&, const MeasurementMultiset&) = default;

private:
    int n_;
    std::uint64_t total_ = 0;
    std::map<BitVec, std::uint64_t> counts_;
};

/// CSV with header `outcome,count`, outcomes MSB first in ascending order.
/// Lines starting with '#' are metadata and are skipped on read.
void write_multiset_csv(std::ostream& out, const MeasurementMultiset& m);
MeasurementMultiset read_multiset_csv(std::istream& in);

}  // namespace nsimon
