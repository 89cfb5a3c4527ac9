#include "ea/gf2.hpp"

#include <algorithm>
#include <bit>

namespace ea::gf2 {

int BitVec::leading() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return (int)(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVec Matrix::mul(const BitVec& v) const {
    BitVec out(rows);
    for (int r = 0; r < rows; ++r) {
        int parity = 0;
        for (int c = 0; c < cols; ++c)
            if (row[r].get(c) && v.get(c)) parity ^= 1;
        out.set(r, parity);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c)) t.set(c, r);
    return t;
}

BitVec reduce(const SubspaceBasis& b, BitVec v) {
    for (const BitVec& u : b.vecs) {
        int p = u.leading();
        if (p >= 0 && v.get(p)) v ^= u;
    }
    return v;
}

bool contains(const SubspaceBasis& b, const BitVec& v) {
    return reduce(b, v).none();
}

SubspaceBasis row_space(std::vector<BitVec> vs, int ambient) {
    std::vector<BitVec> rows;
    for (BitVec& v : vs) {
        for (const BitVec& u : rows) {
            int p = u.leading();
            if (v.get(p)) v ^= u;
        }
        if (!v.none()) rows.push_back(v);
    }
    // back-substitute to RREF and sort by pivot
    std::sort(rows.begin(), rows.end(), [](const BitVec& a, const BitVec& b) {
        return a.leading() < b.leading();
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].get(rows[j].leading())) rows[i] ^= rows[j];
    return SubspaceBasis{ambient, std::move(rows)};
}

std::pair<int, SubspaceBasis> rank_kernel(const Matrix& m) {
    // Eliminate [m^T | I_cols] rows: kernel vectors are the identity parts of
    // zero rows.
    int n = m.cols;
    std::vector<BitVec> rows(n, BitVec(m.rows + n));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < m.rows; ++r)
            if (m.at(r, c)) rows[c].set(r);
        rows[c].set(m.rows + c);
    }
    std::vector<BitVec> done;
    std::vector<BitVec> kernel;
    for (BitVec& v : rows) {
        for (const BitVec& u : done) {
            int p = u.leading();
            if (p < m.rows && v.get(p)) v ^= u;
        }
        int p = v.leading();
        if (p >= 0 && p < m.rows) done.push_back(v);
        else {
            BitVec k(n);
            for (int c = 0; c < n; ++c)
                if (v.get(m.rows + c)) k.set(c);
            kernel.push_back(k);
        }
    }
    int rank = (int)done.size();
    return {rank, row_space(std::move(kernel), n)};
}

std::optional<BitVec> solve(const Matrix& m, const BitVec& target) {
    if (target.size() != m.rows)
        throw std::invalid_argument("gf2::solve: target length != rows");
    return Solver(m).solve(target);
}

SubspaceBasis column_space(const Matrix& m) {
    Matrix t = m.transpose();
    return row_space(t.row, m.rows);
}

SubspaceBasis quotient_basis(const SubspaceBasis& ambient, const SubspaceBasis& sub) {
    for (const BitVec& v : sub.vecs)
        if (!contains(ambient, v))
            throw std::invalid_argument("quotient_basis: sub not contained in ambient");
    SubspaceBasis acc = sub;
    std::vector<BitVec> reps;
    for (const BitVec& v : ambient.vecs) {
        BitVec r = reduce(acc, v);
        if (!r.none()) {
            reps.push_back(v);
            std::vector<BitVec> all = acc.vecs;
            all.push_back(v);
            acc = row_space(std::move(all), ambient.ambient);
        }
    }
    return SubspaceBasis{ambient.ambient, std::move(reps)};
}

Solver::Solver(const Matrix& m) : rows_(m.rows), cols_(m.cols) {
    std::vector<BitVec> work(rows_, BitVec(cols_ + rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            if (m.at(r, c)) work[r].set(c);
        work[r].set(cols_ + r);
    }
    for (BitVec& v : work) {
        for (std::size_t i = 0; i < elim_.size(); ++i)
            if (pivot_col_[i] >= 0 && v.get(pivot_col_[i])) v ^= elim_[i];
        int p = v.leading();
        if (p >= 0 && p < cols_) {
            // reduce previous rows by the new pivot
            for (std::size_t i = 0; i < elim_.size(); ++i)
                if (elim_[i].get(p)) elim_[i] ^= v;
            elim_.push_back(std::move(v));
            pivot_col_.push_back(p);
        } else {
            elim_.push_back(std::move(v));
            pivot_col_.push_back(-1);  // zero row (of m); keeps row-op record
        }
    }
}

std::optional<BitVec> Solver::solve(const BitVec& target) const {
    if (target.size() != rows_)
        throw std::invalid_argument("gf2::Solver: target length != rows");
    BitVec x(cols_);
    for (std::size_t i = 0; i < elim_.size(); ++i) {
        int parity = 0;
        for (int r = 0; r < rows_; ++r)
            if (elim_[i].get(cols_ + r) && target.get(r)) parity ^= 1;
        if (pivot_col_[i] >= 0) {
            if (parity) x.set(pivot_col_[i]);
        } else if (parity) {
            return std::nullopt;
        }
    }
    return x;
}

} // namespace ea::gf2
