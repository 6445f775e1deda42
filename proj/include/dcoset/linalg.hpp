// linalg.hpp - exact rational linear algebra on small integer vectors.
#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

namespace dcoset {

using Rat = boost::rational<long long>;
using IntVec = std::vector<int>;

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// boost::rational's heterogeneous comparisons recurse on int literals; test
// the numerator instead (denominators are always positive).
inline bool rat_zero(const Rat& x) { return x.numerator() == 0; }

// Full row reduction (RREF) in place; returns the rank.
inline int row_reduce(RatMat& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!rat_zero(m[i][c])) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rat lead = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || rat_zero(m[i][c])) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline RatMat to_rat_rows(const std::vector<IntVec>& rows) {
    RatMat m;
    m.reserve(rows.size());
    for (const auto& v : rows) {
        RatRow r;
        r.reserve(v.size());
        for (int x : v) r.emplace_back(x);
        m.push_back(std::move(r));
    }
    return m;
}

inline int rank_of(const std::vector<IntVec>& rows) {
    RatMat m = to_rat_rows(rows);
    return row_reduce(m);
}

// Incremental echelon span for repeated membership queries.
struct RatSpan {
    RatMat rows;             // echelon rows with distinct leading columns
    std::vector<int> leads;  // leading column per row

    // Reduce v against the stored rows; returns the residue.
    RatRow reduce(const IntVec& v) const {
        RatRow w;
        w.reserve(v.size());
        for (int x : v) w.emplace_back(x);
        for (size_t i = 0; i < rows.size(); ++i) {
            const Rat f = w[leads[i]];
            if (rat_zero(f)) continue;
            for (size_t j = 0; j < w.size(); ++j) w[j] -= f * rows[i][j];
        }
        return w;
    }

    bool contains(const IntVec& v) const {
        for (const Rat& x : reduce(v))
            if (!rat_zero(x)) return false;
        return true;
    }

    // Returns true if v enlarged the span.
    bool add(const IntVec& v) {
        RatRow w = reduce(v);
        int lead = -1;
        for (size_t j = 0; j < w.size(); ++j) {
            if (!rat_zero(w[j])) { lead = static_cast<int>(j); break; }
        }
        if (lead < 0) return false;
        const Rat f = w[lead];
        for (auto& x : w) x /= f;
        rows.push_back(std::move(w));
        leads.push_back(lead);
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }
};

// Solve sum_i c_i * basis[i] = v over the rationals.  The basis must be
// linearly independent; returns nullopt when the system is inconsistent.
inline std::optional<RatRow> solve_in_basis(const std::vector<IntVec>& basis,
                                            const IntVec& v) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) {
        for (int x : v)
            if (x != 0) return std::nullopt;
        return RatRow{};
    }
    const int d = static_cast<int>(v.size());
    RatMat m(d, RatRow(k + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][k] = Rat(v[i]);
    }
    row_reduce(m);
    RatRow sol(k, Rat(0));
    for (int i = 0; i < d; ++i) {
        int lead = -1;
        for (int j = 0; j <= k; ++j) {
            if (!rat_zero(m[i][j])) { lead = j; break; }
        }
        if (lead < 0) continue;
        if (lead == k) return std::nullopt;  // 0 = nonzero row
        sol[lead] = m[i][k];
    }
    return sol;
}

// Is v an integer combination of the (independent) basis vectors?
inline bool is_z_combination(const std::vector<IntVec>& basis, const IntVec& v) {
    auto sol = solve_in_basis(basis, v);
    if (!sol) return false;
    for (const Rat& c : *sol)
        if (c.denominator() != 1) return false;
    return true;
}

}  // namespace dcoset
