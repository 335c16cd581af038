#pragma once

#include <cstdint>
#include <vector>

#include "nsimon/bitvec.hpp"

namespace nsimon {

/// Probability mass over F_2^n, stored densely (index = integer value of the
/// outcome). n <= 24.
class Distribution {
public:
    static constexpr int kMaxBits = 24;

    explicit Distribution(int n = 0);
    Distribution(int n, std::vector<double> probabilities);

    int n() const { return n_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::uint64_t outcome) const { return p_[outcome]; }
    double& operator[](std::uint64_t outcome) { return p_[outcome]; }
    double at(const BitVec& y) const;
    const std::vector<double>& probabilities() const { return p_; }

    double total() const;
    /// Throws RangeError unless nonnegative and summing to 1 within tol.
    void check_normalized(double tol = 1e-9) const;

private:
    int n_;
    std::vector<double> p_;
};

}  // namespace nsimon
