#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tricert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    std::vector<Int> column(int c) const {
        std::vector<Int> v(rows);
        for (int r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }

    bool column_is_zero(int c) const {
        for (int r = 0; r < rows; ++r)
            if (at(r, c) != 0) return false;
        return true;
    }
};

// Rank over the rationals, by fraction-free elimination on a copy.
inline int rational_rank(IntMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            Int p = m.at(rank, col), q = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) * p - m.at(rank, c) * q;
        }
        ++rank;
    }
    return rank;
}

// Basis of the right kernel over the rationals (columns x of m with m x = 0).
inline std::vector<std::vector<Rat>> rational_kernel_basis(const IntMatrix& m) {
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<Rat>> rr(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) rr[r][c] = Rat(m.at(r, c));

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (rr[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rr[row], rr[p]);
        Rat inv = rr[row][col];
        for (int c = col; c < cols; ++c) rr[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || rr[r][col] == 0) continue;
            Rat f = rr[r][col];
            for (int c = col; c < cols; ++c) rr[r][c] -= f * rr[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rr[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Rank of the matrix over GF(2).
inline int gf2_rank(const IntMatrix& m) {
    int words = (m.cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(m.rows, std::vector<uint64_t>(words, 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) % 2 != 0) rows[r][c / 64] ^= (uint64_t{1} << (c % 64));
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int p = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[r][col / 64] >> (col % 64) & 1) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            if (rows[r][col / 64] >> (col % 64) & 1)
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tricert
