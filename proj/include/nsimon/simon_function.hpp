#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nsimon/bitvec.hpp"

namespace nsimon {

/// f_s(x) = x + x_i * s, a (2:1) function with period s. Requires s != 0
/// and s_i = 1.
class SimonFunction {
public:
    SimonFunction(BitVec period, int control_index);

    /// s = 0^{n-2}11 with control index 0, the instantiation used in every
    /// hardware-style experiment. Requires n >= 2.
    static SimonFunction standard(int n);
    /// Control index defaults to the lowest set bit of s.
    static SimonFunction with_period(const BitVec& period);

    int n() const { return period_.size(); }
    const BitVec& period() const { return period_; }
    int control_index() const { return control_; }

    BitVec operator()(const BitVec& x) const { return eval(x); }
    BitVec eval(const BitVec& x) const;

    /// f(candidate) == f(0), i.e. candidate is 0 or s. Callers reject 0.
    bool verify_period(const BitVec& candidate) const;

    /// f(1^n) + 1^n, which equals s because s_i = 1.
    BitVec classical_leak() const;

    /// Full value table indexed by the integer value of x.
    std::vector<BitVec> table() const;

private:
    BitVec period_;
    int control_;
};

/// Decides whether a full value table (entry x = f(x), 2^n entries) is a
/// Simon function and returns its period when it is. n <= 16.
std::optional<BitVec> is_simon_function(std::span<const BitVec> table);

}  // namespace nsimon
