#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "nsimon/error.hpp"

namespace nsimon {

/// An element of F_2^n packed into one machine word, n <= 64.
///
/// Coordinate i is bit i of the word, so the text form "011" (most
/// significant coordinate first) denotes x_2 = 0, x_1 = 1, x_0 = 1.
class BitVec {
public:
    static constexpr int kMaxBits = 64;

    BitVec() = default;
    BitVec(int n, std::uint64_t bits);

    static BitVec zero(int n) { return BitVec(n, 0); }
    static BitVec ones(int n);
    static BitVec unit(int n, int i);
    /// Parses an MSB-first bitstring such as "0110".
    static BitVec parse(std::string_view text);

    int size() const { return n_; }
    std::uint64_t word() const { return bits_; }
    bool get(int i) const;
    void set(int i, bool value);
    bool is_zero() const { return bits_ == 0; }

    /// MSB-first text, matching parse().
    std::string to_string() const;

    BitVec& operator+=(const BitVec& other);
    friend BitVec operator+(BitVec lhs, const BitVec& rhs) { return lhs += rhs; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    /// Orders by length, then numerically; this is the lexicographic order
    /// of the MSB-first text for equal lengths.
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// <x, y> = sum x_i y_i mod 2.
bool inner_product(const BitVec& x, const BitVec& y);

inline int hamming_weight(const BitVec& x) { return std::popcount(x.word()); }

inline BitVec add(const BitVec& x, const BitVec& y) { return x + y; }

/// Mask with the low n bits set.
constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace nsimon

template <>
struct std::hash<nsimon::BitVec> {
    std::size_t operator()(const nsimon::BitVec& v) const noexcept {
        return std::hash<std::uint64_t>{}(v.word() * 0x9E3779B97F4A7C15ull ^
                                          static_cast<std::uint64_t>(v.size()));
    }
};
