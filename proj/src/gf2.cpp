#include <algorithm>
#include <bit>
#include <string>

#include "nsimon/bitvec.hpp"
#include "nsimon/gf2_matrix.hpp"

namespace nsimon {

BitVec::BitVec(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxBits) {
        throw CapacityError("BitVec length " + std::to_string(n) + " outside [0, 64]");
    }
    if ((bits & ~low_mask(n)) != 0) {
        throw DimensionError("BitVec word has bits above length " + std::to_string(n));
    }
}

BitVec BitVec::ones(int n) { return BitVec(n, low_mask(n)); }

BitVec BitVec::unit(int n, int i) {
    if (i < 0 || i >= n) throw DimensionError("unit vector index out of range");
    return BitVec(n, std::uint64_t{1} << i);
}

BitVec BitVec::parse(std::string_view text) {
    const int n = static_cast<int>(text.size());
    if (n > kMaxBits) throw CapacityError("bitstring longer than 64");
    std::uint64_t w = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw ParseError("invalid bitstring '" + std::string(text) + "'");
        }
        w = (w << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return BitVec(n, w);
}

bool BitVec::get(int i) const {
    if (i < 0 || i >= n_) throw DimensionError("coordinate index out of range");
    return (bits_ >> i) & 1u;
}

void BitVec::set(int i, bool value) {
    if (i < 0 || i >= n_) throw DimensionError("coordinate index out of range");
    const std::uint64_t m = std::uint64_t{1} << i;
    bits_ = value ? (bits_ | m) : (bits_ & ~m);
}

std::string BitVec::to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
        if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(n_ - 1 - i)] = '1';
    }
    return out;
}

BitVec& BitVec::operator+=(const BitVec& other) {
    if (other.n_ != n_) throw DimensionError("BitVec addition of different lengths");
    bits_ ^= other.bits_;
    return *this;
}

bool inner_product(const BitVec& x, const BitVec& y) {
    if (x.size() != y.size()) throw DimensionError("inner product of different lengths");
    return std::popcount(x.word() & y.word()) & 1;
}

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(int cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw DimensionError("matrix rows must all have length " + std::to_string(cols_));
    }
}

void Gf2Matrix::append(const BitVec& row) {
    if (row.size() != cols_) throw DimensionError("appended row has wrong length");
    rows_.push_back(row);
}

int Gf2Matrix::rank() const {
    EchelonBasis basis(cols_);
    for (const auto& r : rows_) basis.insert(r);
    return basis.rank();
}

bool Gf2Matrix::in_span(const BitVec& y) const {
    if (y.size() != cols_) throw DimensionError("span test vector has wrong length");
    EchelonBasis basis(cols_);
    for (const auto& r : rows_) basis.insert(r);
    return basis.in_span(y);
}

std::vector<BitVec> Gf2Matrix::nullspace() const {
    std::vector<std::uint64_t> m;
    m.reserve(rows_.size());
    for (const auto& r : rows_) m.push_back(r.word());

    // Reduced row echelon form, pivot columns taken lowest index first and
    // pivot rows lowest index first.
    std::vector<int> pivot_col_of_row;
    std::size_t next_row = 0;
    for (int col = 0; col < cols_ && next_row < m.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t found = next_row;
        while (found < m.size() && !(m[found] & bit)) ++found;
        if (found == m.size()) continue;
        std::swap(m[next_row], m[found]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != next_row && (m[r] & bit)) m[r] ^= m[next_row];
        }
        pivot_col_of_row.push_back(col);
        ++next_row;
    }

    std::uint64_t pivot_cols = 0;
    for (int c : pivot_col_of_row) pivot_cols |= std::uint64_t{1} << c;

    std::vector<BitVec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (pivot_cols & (std::uint64_t{1} << free)) continue;
        std::uint64_t x = std::uint64_t{1} << free;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            if (m[r] & (std::uint64_t{1} << free)) x |= std::uint64_t{1} << pivot_col_of_row[r];
        }
        basis.emplace_back(cols_, x);
    }
    return basis;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(int cols) : cols_(cols), pivots_(static_cast<std::size_t>(cols), 0) {
    if (cols < 0 || cols > BitVec::kMaxBits) throw CapacityError("EchelonBasis width outside [0, 64]");
}

std::uint64_t EchelonBasis::reduce(std::uint64_t w) const {
    while (w != 0) {
        const int top = 63 - std::countl_zero(w);
        const std::uint64_t p = pivots_[static_cast<std::size_t>(top)];
        if (p == 0) return w;
        w ^= p;
    }
    return 0;
}

bool EchelonBasis::in_span(const BitVec& y) const {
    if (y.size() != cols_) throw DimensionError("span test vector has wrong length");
    return reduce(y.word()) == 0;
}

bool EchelonBasis::insert(const BitVec& y) {
    if (y.size() != cols_) throw DimensionError("inserted vector has wrong length");
    const std::uint64_t r = reduce(y.word());
    if (r == 0) return false;
    pivots_[static_cast<std::size_t>(63 - std::countl_zero(r))] = r;
    ++rank_;
    return true;
}

void EchelonBasis::clear() {
    std::fill(pivots_.begin(), pivots_.end(), 0);
    rank_ = 0;
}

// ---------------------------------------------------------------------------

BitVec nullspace_period(const Gf2Matrix& y) {
    const auto basis = y.nullspace();
    if (basis.size() != 1) {
        throw RankError("nullspace has dimension " + std::to_string(basis.size()) + ", expected 1");
    }
    return basis.front();
}

Gf2Matrix orthogonal_basis(const BitVec& s) {
    if (s.is_zero()) throw DegenerateError("s-perp basis requested for s = 0");
    const int n = s.size();
    const int p = std::countr_zero(s.word());
    Gf2Matrix out(n);
    for (int i = 0; i < n; ++i) {
        if (i == p) continue;
        BitVec v = BitVec::unit(n, i);
        if (s.get(i)) v.set(p, true);
        out.append(v);
    }
    return out;
}

bool solve_linear_system(std::span<const BitVec> a, std::span<const bool> b, BitVec& x) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionError("label count differs from row count");
    if (n == 0) throw DimensionError("empty linear system");
    const int cols = a.front().size();
    if (static_cast<std::size_t>(cols) != n) throw DimensionError("linear system is not square");
    if (cols >= 64) throw CapacityError("linear system needs a spare bit for the label column");

    // Label goes into bit `cols` of an augmented row.
    std::vector<std::uint64_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != cols) throw DimensionError("linear system rows differ in length");
        rows[i] = a[i].word() | (static_cast<std::uint64_t>(b[i]) << cols);
    }
    for (int col = 0; col < cols; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        const auto c = static_cast<std::size_t>(col);
        std::size_t found = c;
        while (found < n && !(rows[found] & bit)) ++found;
        if (found == n) return false;
        std::swap(rows[c], rows[found]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && (rows[r] & bit)) rows[r] ^= rows[c];
        }
    }
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w |= ((rows[i] >> cols) & 1u) << i;
    x = BitVec(cols, w);
    return true;
}

}  // namespace nsimon
