#ifndef EA_GF2_HPP
#define EA_GF2_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ea::gf2 {

using Word = std::uint64_t;

/// Bit-packed F2 vector of fixed length.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true) {
        Word m = Word(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= Word(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool none() const {
        for (Word w : w_) if (w) return false;
        return true;
    }
    // Index of the first set bit, or -1.
    int leading() const;

    bool operator==(const BitVec&) const = default;

private:
    int n_ = 0;
    std::vector<Word> w_;
};

/// Dense bit-packed matrix over F2, row-major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<BitVec> row;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), row(r, BitVec(c)) {}

    static Matrix identity(int n);

    bool at(int r, int c) const { return row[r].get(c); }
    void set(int r, int c, bool v = true) { row[r].set(c, v); }
    void flip(int r, int c) { row[r].flip(c); }

    BitVec mul(const BitVec& v) const;
    Matrix transpose() const;
};

/// Row space basis in reduced row-echelon form; pivots strictly increase.
struct SubspaceBasis {
    int ambient = 0;
    std::vector<BitVec> vecs;

    int dim() const { return (int)vecs.size(); }
};

// Reduce v against the basis; returns the residual.
BitVec reduce(const SubspaceBasis& b, BitVec v);
bool contains(const SubspaceBasis& b, const BitVec& v);

// RREF basis of the span of the given vectors.
SubspaceBasis row_space(std::vector<BitVec> vs, int ambient);

// rank + RREF kernel basis; rank + dim ker = cols.
std::pair<int, SubspaceBasis> rank_kernel(const Matrix& m);

// Solve m x = target; empty when target is outside the column space.
// Throws std::invalid_argument on a length mismatch.
std::optional<BitVec> solve(const Matrix& m, const BitVec& target);

// Column space basis of m.
SubspaceBasis column_space(const Matrix& m);

// Representatives completing sub to ambient; throws if sub is not contained
// in ambient.
SubspaceBasis quotient_basis(const SubspaceBasis& ambient, const SubspaceBasis& sub);

/// Cached elimination of a matrix, for repeated solves against new targets.
class Solver {
public:
    explicit Solver(const Matrix& m);
    std::optional<BitVec> solve(const BitVec& target) const;
    int rank() const {
        int n = 0;
        for (int p : pivot_col_) n += (p >= 0);
        return n;
    }

private:
    int rows_, cols_;
    std::vector<BitVec> elim_;     // eliminated rows of [m | I_rows]
    std::vector<int> pivot_col_;   // pivot column per eliminated row
};

} // namespace ea::gf2

#endif
