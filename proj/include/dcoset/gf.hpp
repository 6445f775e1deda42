// gf.hpp - prime field arithmetic and dense matrices over F_q for the oracle.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcoset {

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

// F_q for q in {2, 3, 5, 7}; elements are 0..q-1 stored in uint8_t.
struct PrimeField {
    int q = 2;
    std::array<uint8_t, 8> inv_table{};

    explicit PrimeField(int prime = 2) : q(prime) {
        if (q != 2 && q != 3 && q != 5 && q != 7)
            throw std::invalid_argument("oracle fields are limited to q in {2,3,5,7}");
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (a * b % q == 1) inv_table[a] = static_cast<uint8_t>(b);
    }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % q); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + q - b) % q); }
    uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>(a * b % q); }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((q - a) % q); }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("division by zero in F_q");
        return inv_table[a];
    }
    uint8_t reduce(long long v) const {
        return static_cast<uint8_t>(((v % q) + q) % q);
    }

    // Smallest generator of the multiplicative group (1 when q = 2).
    uint8_t primitive() const {
        for (int g = 1; g < q; ++g) {
            int x = g, order = 1;
            while (x != 1) { x = x * g % q; ++order; }
            if (order == q - 1) return static_cast<uint8_t>(g);
        }
        return 1;
    }
};

// ---------------------------------------------------------------------------
// Vectors and matrices
// ---------------------------------------------------------------------------

using FVec = std::vector<uint8_t>;

struct FMat {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    FMat() = default;
    FMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const FMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline FMat identity_mat(int n) {
    FMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline FMat transpose(const FMat& m) {
    FMat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

inline FMat mat_mul(const PrimeField& f, const FMat& x, const FMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    FMat out(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const uint8_t v = x.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < y.cols; ++c)
                out.at(r, c) = f.add(out.at(r, c), f.mul(v, y.at(k, c)));
        }
    return out;
}

inline FVec mat_vec(const PrimeField& f, const FMat& m, const FVec& v) {
    if (m.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix/vector shape mismatch");
    FVec out(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        int s = 0;
        for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * v[c];
        out[r] = f.reduce(s);
    }
    return out;
}

// In-place reduced row echelon form; returns the rank.
inline int rref(const PrimeField& f, FMat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const uint8_t scale = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), scale);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            const uint8_t k = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(k, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

inline int mat_rank(const PrimeField& f, FMat m) { return rref(f, m); }

inline FMat mat_inverse(const PrimeField& f, const FMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("only square matrices invert");
    const int n = m.rows;
    FMat work(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) work.at(r, c) = m.at(r, c);
        work.at(r, n + r) = 1;
    }
    if (rref(f, work) != n) throw std::domain_error("singular matrix");
    FMat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = work.at(r, n + c);
    return out;
}

inline uint8_t mat_det(const PrimeField& f, FMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    uint8_t det = 1;
    int rank = 0;
    for (int col = 0; col < m.cols; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != rank) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
            det = f.mul(det, f.neg(1));
        }
        det = f.mul(det, m.at(rank, col));
        const uint8_t scale = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), scale);
        for (int r = rank + 1; r < m.rows; ++r) {
            const uint8_t k = m.at(r, col);
            if (k == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(k, m.at(rank, c)));
        }
        ++rank;
    }
    return det;
}

// The span of the rows as a canonical key: RREF with zero rows dropped.
inline FMat row_space_canon(const PrimeField& f, FMat m) {
    const int rank = rref(f, m);
    FMat out(rank, m.cols);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

inline std::string mat_key(const FMat& m) {
    std::string key;
    key.reserve(m.a.size() + 2);
    key.push_back(static_cast<char>(m.rows));
    key.push_back(static_cast<char>(m.cols));
    key.append(m.a.begin(), m.a.end());
    return key;
}

// Basis of the right kernel {v : m v = 0}, one row per basis vector.
inline FMat right_kernel(const PrimeField& f, FMat m) {
    const int n = m.cols;
    const int rank = rref(f, m);
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < n; ++c)
            if (m.at(r, c) != 0) { pivot_col[r] = c; is_pivot[c] = true; break; }
    FMat ker(n - rank, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker.at(row, c) = 1;
        for (int r = 0; r < rank; ++r)
            ker.at(row, pivot_col[r]) = f.neg(m.at(r, c));
        ++row;
    }
    return ker;
}

}  // namespace dcoset
