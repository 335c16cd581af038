#pragma once

#include <span>
#include <vector>

#include "nsimon/bitvec.hpp"

namespace nsimon {

/// A list of equal-length rows over F_2. Row order is preserved; reductions
/// work on copies.
class Gf2Matrix {
public:
    explicit Gf2Matrix(int cols) : cols_(cols) {}
    Gf2Matrix(int cols, std::vector<BitVec> rows);

    int cols() const { return cols_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitVec>& rows() const { return rows_; }
    const BitVec& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

    void append(const BitVec& row);

    int rank() const;
    bool in_span(const BitVec& y) const;

    /// Basis of {x : <x, r> = 0 for every row r}, lowest free column first.
    std::vector<BitVec> nullspace() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    int cols_;
    std::vector<BitVec> rows_;
};

/// Incremental row echelon basis: cheap span tests while rows are added one
/// at a time (the inner loop of Simon-style sample collection).
class EchelonBasis {
public:
    explicit EchelonBasis(int cols);

    int cols() const { return cols_; }
    int rank() const { return rank_; }
    bool in_span(const BitVec& y) const;
    /// Adds y if independent; returns whether the rank grew.
    bool insert(const BitVec& y);
    void clear();

private:
    std::uint64_t reduce(std::uint64_t w) const;

    int cols_;
    int rank_ = 0;
    // pivots_[b] is a reduced row whose highest set bit is b, or 0.
    std::vector<std::uint64_t> pivots_;
};

/// The unique nonzero s with <s, y> = 0 for all rows of Y.
/// Throws RankError unless rank(Y) = cols - 1.
BitVec nullspace_period(const Gf2Matrix& y);

/// n-1 independent vectors spanning s-perp. Throws DegenerateError for s = 0.
Gf2Matrix orthogonal_basis(const BitVec& s);

/// Unique solution of A x = b for square nonsingular A (rows of `a`, labels
/// bit i of `b`). Returns false when A is singular.
bool solve_linear_system(std::span<const BitVec> a, std::span<const bool> b, BitVec& x);

}  // namespace nsimon
