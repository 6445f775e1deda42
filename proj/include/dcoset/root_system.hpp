// root_system.hpp - root systems of the classical families in standard coordinates.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace dcoset {

using Root = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: throw std::invalid_argument(std::string("unknown family letter: ") + c);
    }
}

inline long long dot(const Root& a, const Root& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

inline Root negate(const Root& r) {
    Root out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
    return out;
}

inline Root add(const Root& a, const Root& b) {
    Root out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline int support_size(const Root& r) {
    int s = 0;
    for (int x : r)
        if (x != 0) ++s;
    return s;
}

struct RootSystem {
    Family family = Family::A;
    int rank = 0;  // number of simple roots
    int dim = 0;   // coordinates of the ambient space (rank, or rank+1 for A)
    std::vector<Root> roots;   // sorted
    std::vector<Root> simple;  // simple[i - 1] = alpha_i

    bool contains(const Root& r) const {
        return std::binary_search(roots.begin(), roots.end(), r);
    }

    // Simple roots addressed by their 1-based diagram node number.
    const Root& alpha(int i) const {
        if (i < 1 || i > rank)
            throw std::invalid_argument("alpha: node " + std::to_string(i) +
                                        " outside 1.." + std::to_string(rank));
        return simple[static_cast<size_t>(i) - 1];
    }

    std::string name() const { return family_letter(family) + std::to_string(rank); }
};

inline RootSystem build_root_system(Family f, int n) {
    RootSystem rs;
    rs.family = f;
    rs.rank = n;
    auto unit = [](int dim, int i, int v) {
        Root r(dim, 0);
        r[i] = v;
        return r;
    };
    switch (f) {
        case Family::A: {
            if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
            rs.dim = n + 1;
            for (int i = 0; i < rs.dim; ++i)
                for (int j = 0; j < rs.dim; ++j) {
                    if (i == j) continue;
                    Root r(rs.dim, 0);
                    r[i] = 1;
                    r[j] = -1;
                    rs.roots.push_back(std::move(r));
                }
            for (int i = 0; i < n; ++i) {
                Root r(rs.dim, 0);
                r[i] = 1;
                r[i + 1] = -1;
                rs.simple.push_back(std::move(r));
            }
            break;
        }
        case Family::B: {
            if (n < 1) throw std::invalid_argument("B_n requires n >= 1");
            rs.dim = n;
            for (int i = 0; i < n; ++i) {
                rs.roots.push_back(unit(n, i, 1));
                rs.roots.push_back(unit(n, i, -1));
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            Root r(n, 0);
                            r[i] = si;
                            r[j] = sj;
                            rs.roots.push_back(std::move(r));
                        }
            for (int i = 0; i + 1 < n; ++i) {
                Root r(n, 0);
                r[i] = 1;
                r[i + 1] = -1;
                rs.simple.push_back(std::move(r));
            }
            rs.simple.push_back(unit(n, n - 1, 1));
            break;
        }
        case Family::C: {
            if (n < 1) throw std::invalid_argument("C_n requires n >= 1");
            rs.dim = n;
            for (int i = 0; i < n; ++i) {
                rs.roots.push_back(unit(n, i, 2));
                rs.roots.push_back(unit(n, i, -2));
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            Root r(n, 0);
                            r[i] = si;
                            r[j] = sj;
                            rs.roots.push_back(std::move(r));
                        }
            for (int i = 0; i + 1 < n; ++i) {
                Root r(n, 0);
                r[i] = 1;
                r[i + 1] = -1;
                rs.simple.push_back(std::move(r));
            }
            rs.simple.push_back(unit(n, n - 1, 2));
            break;
        }
        case Family::D: {
            if (n < 2) throw std::invalid_argument("D_n requires n >= 2");
            rs.dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            Root r(n, 0);
                            r[i] = si;
                            r[j] = sj;
                            rs.roots.push_back(std::move(r));
                        }
            for (int i = 0; i + 1 < n; ++i) {
                Root r(n, 0);
                r[i] = 1;
                r[i + 1] = -1;
                rs.simple.push_back(std::move(r));
            }
            Root last(n, 0);
            last[n - 2] = 1;
            last[n - 1] = 1;
            rs.simple.push_back(std::move(last));
            break;
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

// Coefficients of r in the simple basis; every root has a unique integral
// expansion.
inline IntVec simple_coeffs(const RootSystem& rs, const Root& r) {
    auto sol = solve_in_basis(rs.simple, r);
    if (!sol) throw std::invalid_argument("simple_coeffs: vector outside the root lattice span");
    IntVec out;
    out.reserve(sol->size());
    for (const Rat& c : *sol) {
        if (c.denominator() != 1)
            throw std::invalid_argument("simple_coeffs: non-integral expansion");
        out.push_back(static_cast<int>(c.numerator()));
    }
    return out;
}

// Sum of the simple roots with diagram indices in [min(i,j), max(i,j)].
// Errors when a node id is out of range or the resulting sum is not a root
// (e.g. D_n with endpoints n-1 and n: the two fork nodes sum to 2e_{n-1}).
inline Root sum_over_path(const RootSystem& rs, int i, int j) {
    if (i < 1 || i > rs.rank || j < 1 || j > rs.rank)
        throw std::invalid_argument("sum_over_path: node id outside 1.." + std::to_string(rs.rank));
    const int lo = std::min(i, j), hi = std::max(i, j);
    Root sum(rs.dim, 0);
    for (int k = lo; k <= hi; ++k) sum = add(sum, rs.alpha(k));
    if (!rs.contains(sum))
        throw std::invalid_argument("sum_over_path: sum over nodes " + std::to_string(lo) +
                                    ".." + std::to_string(hi) + " is not a root");
    return sum;
}

inline unsigned long long weyl_order(Family f, int n) {
    auto fact = [](int k) {
        unsigned long long r = 1;
        for (int i = 2; i <= k; ++i) r *= static_cast<unsigned long long>(i);
        return r;
    };
    switch (f) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return (1ULL << n) * fact(n);
        case Family::D: return (1ULL << (n - 1)) * fact(n);
    }
    return 0;
}

}  // namespace dcoset
