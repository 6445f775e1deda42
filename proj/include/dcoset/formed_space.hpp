// formed_space.hpp - natural modules with their bilinear and quadratic forms.
#pragma once

#include <numeric>
#include <optional>

#include "gf.hpp"
#include "root_system.hpp"

namespace dcoset {

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

// The natural module of a classical group over F_q.  Basis order for B/C/D is
// e_1..e_n, f_1..f_n and, for B, a trailing anisotropic vector; an A ambient
// carries the zero forms on F_q^{n+1}.  beta(e_i, f_j) = delta_ij and the
// quadratic form, when present, vanishes on every e_i and f_i.
struct FormedSpace {
    Family family = Family::A;
    int rank = 0;
    PrimeField field{2};
    int dim = 0;
    int witt = 0;
    bool symplectic = false;       // beta alternating (C); else symmetric
    bool has_quadratic = false;    // B and D carry Q
    bool degenerate_polar = false; // B over q = 2: rad(beta) is the d line
    FMat bilinear;
    FMat qcoef;  // upper-triangular coefficients of Q

    int e_index(int i) const { return i - 1; }            // 1-based pair index
    int f_index(int i) const { return rank + i - 1; }
    int d_index() const { return 2 * rank; }               // B only
};

inline FormedSpace build_formed_space(Family family, int n, int q) {
    if (n < 1) throw std::invalid_argument("formed spaces need rank >= 1");
    FormedSpace s;
    s.family = family;
    s.rank = n;
    s.field = PrimeField(q);
    switch (family) {
        case Family::A:
            s.dim = n + 1;
            s.witt = n + 1;  // the zero form makes every subspace singular
            break;
        case Family::B:
            s.dim = 2 * n + 1;
            s.witt = n;
            s.has_quadratic = true;
            s.degenerate_polar = (q == 2);
            break;
        case Family::C:
            s.dim = 2 * n;
            s.witt = n;
            s.symplectic = true;
            break;
        case Family::D:
            s.dim = 2 * n;
            s.witt = n;
            s.has_quadratic = true;
            break;
    }
    s.bilinear = FMat(s.dim, s.dim);
    s.qcoef = FMat(s.dim, s.dim);
    if (family == Family::A) return s;
    const PrimeField& f = s.field;
    for (int i = 1; i <= n; ++i) {
        s.bilinear.at(s.e_index(i), s.f_index(i)) = 1;
        s.bilinear.at(s.f_index(i), s.e_index(i)) = s.symplectic ? f.neg(1) : 1;
    }
    if (s.has_quadratic) {
        for (int i = 1; i <= n; ++i) s.qcoef.at(s.e_index(i), s.f_index(i)) = 1;
        if (family == Family::B) {
            s.qcoef.at(s.d_index(), s.d_index()) = 1;
            s.bilinear.at(s.d_index(), s.d_index()) = f.reduce(2);
        }
    }
    return s;
}

inline uint8_t beta(const FormedSpace& s, const FVec& u, const FVec& v) {
    int acc = 0;
    for (int r = 0; r < s.dim; ++r) {
        if (u[r] == 0) continue;
        int row = 0;
        for (int c = 0; c < s.dim; ++c) row += s.bilinear.at(r, c) * v[c];
        acc += u[r] * (row % s.field.q);
    }
    return s.field.reduce(acc);
}

inline uint8_t quad(const FormedSpace& s, const FVec& v) {
    if (!s.has_quadratic) return 0;
    int acc = 0;
    for (int r = 0; r < s.dim; ++r) {
        if (v[r] == 0) continue;
        for (int c = r; c < s.dim; ++c) acc += s.qcoef.at(r, c) * v[r] * v[c];
    }
    return s.field.reduce(acc);
}

// Singular: both forms vanish on the line.  A symplectic or zero bilinear
// form vanishes on every line, so only Q can obstruct.
inline bool is_singular_vector(const FormedSpace& s, const FVec& v) {
    return !s.has_quadratic || quad(s, v) == 0;
}

inline FVec basis_vector(const FormedSpace& s, int index) {
    FVec v(s.dim, 0);
    v[index] = 1;
    return v;
}

// Rows of m span a totally singular subspace: Q of every row is zero and beta
// pairs every two rows (including a row with itself) to zero.
inline bool is_totally_singular(const FormedSpace& s, const FMat& m) {
    std::vector<FVec> rows;
    for (int r = 0; r < m.rows; ++r)
        rows.emplace_back(m.a.begin() + static_cast<size_t>(r) * m.cols,
                          m.a.begin() + static_cast<size_t>(r + 1) * m.cols);
    for (const FVec& u : rows) {
        if (s.has_quadratic && quad(s, u) != 0) return false;
        for (const FVec& v : rows)
            if (beta(s, u, v) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orthogonal decompositions V = V1 perp V2
// ---------------------------------------------------------------------------

// V1 is the span of the first `split` hyperbolic pairs; V2 takes the rest
// (plus the anisotropic line in a B space).  Projections zero the complement.
struct SpaceDecomposition {
    int split = 0;
    std::vector<uint8_t> mask1;
    std::vector<uint8_t> mask2;
};

inline SpaceDecomposition decompose(const FormedSpace& s, int split) {
    if (split < 1 || split >= s.rank)
        throw std::invalid_argument("decomposition needs 1 <= split < rank");
    SpaceDecomposition d;
    d.split = split;
    d.mask1.assign(s.dim, 0);
    d.mask2.assign(s.dim, 0);
    if (s.family == Family::A) {
        for (int i = 0; i < s.dim; ++i) (i < split ? d.mask1 : d.mask2)[i] = 1;
        return d;
    }
    for (int i = 1; i <= s.rank; ++i) {
        auto& m = (i <= split) ? d.mask1 : d.mask2;
        m[s.e_index(i)] = 1;
        m[s.f_index(i)] = 1;
    }
    if (s.family == Family::B) d.mask2[s.d_index()] = 1;
    return d;
}

inline FVec project(const std::vector<uint8_t>& mask, const FVec& v) {
    FVec out(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (mask[i]) out[i] = v[i];
    return out;
}

inline int mask_dim(const std::vector<uint8_t>& mask) {
    return std::accumulate(mask.begin(), mask.end(), 0);
}

// ---------------------------------------------------------------------------
// Closed-form counts
// ---------------------------------------------------------------------------

// Counts saturate at this bound; callers only compare them against budgets.
constexpr long long kCountCap = 1'000'000'000'000'000'000LL;

inline long long pow_ll(int q, int e) {
    long long v = 1;
    while (e-- > 0) v *= q;
    return v;
}

inline long long gaussian_binomial(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // Exact product of q-number fractions; each partial product is itself a
    // Gaussian binomial, so the division stays integral.
    __int128 result = 1;
    for (int i = 0; i < k; ++i) {
        const long long num = (pow_ll(q, n - i) - 1) / (q - 1);
        const long long den = (pow_ll(q, i + 1) - 1) / (q - 1);
        result = result * num / den;
        if (result > kCountCap) return kCountCap;
    }
    return static_cast<long long>(result);
}

// Number of totally singular k-subspaces (both D classes combined).
inline long long ts_subspace_count(const FormedSpace& s, int k) {
    if (k == 0) return 1;
    if (k < 0 || k > s.witt) return 0;
    const int q = s.field.q, n = s.rank;
    if (s.family == Family::A) return gaussian_binomial(q, s.dim, k);
    __int128 count = gaussian_binomial(q, n, k);
    const int lo = (s.family == Family::D) ? n - k : n - k + 1;
    const int hi = (s.family == Family::D) ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) {
        count *= pow_ll(q, i) + 1;
        if (count > kCountCap) return kCountCap;
    }
    return static_cast<long long>(count);
}

// The exact q-analogue of the gaussian_binomial computed the slow way; used
// to guard the closed form above.
inline long long gaussian_binomial_by_recursion(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    return gaussian_binomial_by_recursion(q, n - 1, k - 1) +
           pow_ll(q, k) * gaussian_binomial_by_recursion(q, n - 1, k);
}

}  // namespace dcoset
