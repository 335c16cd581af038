#include <bit>
#include <string>
#include <unordered_map>

#include "nsimon/simon_function.hpp"

namespace nsimon {

SimonFunction::SimonFunction(BitVec period, int control_index)
    : period_(period), control_(control_index) {
    if (period_.is_zero()) throw DegenerateError("Simon period must be nonzero");
    if (control_index < 0 || control_index >= period_.size() || !period_.get(control_index)) {
        throw DimensionError("control index must point at a 1-coordinate of the period");
    }
}

SimonFunction SimonFunction::standard(int n) {
    if (n < 2) throw RangeError("standard instantiation needs n >= 2");
    return SimonFunction(BitVec(n, 0b11), 0);
}

SimonFunction SimonFunction::with_period(const BitVec& period) {
    if (period.is_zero()) throw DegenerateError("Simon period must be nonzero");
    return SimonFunction(period, std::countr_zero(period.word()));
}

BitVec SimonFunction::eval(const BitVec& x) const {
    if (x.size() != n()) throw DimensionError("Simon function argument has wrong length");
    return x.get(control_) ? x + period_ : x;
}

bool SimonFunction::verify_period(const BitVec& candidate) const {
    if (candidate.size() != n()) return false;
    return eval(candidate) == eval(BitVec::zero(n()));
}

BitVec SimonFunction::classical_leak() const {
    const BitVec all = BitVec::ones(n());
    return eval(all) + all;
}

std::vector<BitVec> SimonFunction::table() const {
    if (n() > 24) throw CapacityError("value table too large");
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << n());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n()); ++x) out.push_back(eval(BitVec(n(), x)));
    return out;
}

std::optional<BitVec> is_simon_function(std::span<const BitVec> table) {
    const std::size_t size = table.size();
    if (size < 2 || !std::has_single_bit(size)) return std::nullopt;
    const int n = std::countr_zero(size);
    if (n > 16) throw CapacityError("Simon table check limited to n <= 16");

    // Every image must have exactly two preimages x, x' and all pairs must
    // share the same difference x + x'.
    std::unordered_map<std::uint64_t, std::uint64_t> first_preimage;
    std::unordered_map<std::uint64_t, int> multiplicity;
    std::optional<std::uint64_t> period;
    for (std::uint64_t x = 0; x < size; ++x) {
        const BitVec& y = table[x];
        if (y.size() != n) return std::nullopt;
        const int seen = ++multiplicity[y.word()];
        if (seen == 1) {
            first_preimage.emplace(y.word(), x);
        } else if (seen == 2) {
            const std::uint64_t d = x ^ first_preimage.at(y.word());
            if (period && *period != d) return std::nullopt;
            period = d;
        } else {
            return std::nullopt;
        }
    }
    for (const auto& [image, count] : multiplicity) {
        if (count != 2) return std::nullopt;
    }
    if (!period || *period == 0) return std::nullopt;
    return BitVec(n, *period);
}

}  // namespace nsimon
