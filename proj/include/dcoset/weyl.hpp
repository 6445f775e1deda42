// weyl.hpp - Weyl group conjugacy of subsystems via signed-permutation search.
#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "subsystem.hpp"

namespace dcoset {

// Element of the coordinate Weyl group: coordinate p is scaled by sign[p] and
// sent to slot perm[p].  Family A allows permutations only; B and C allow all
// signed permutations; D requires an even number of sign flips.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    Root apply(const Root& r) const {
        Root out(r.size(), 0);
        for (size_t p = 0; p < r.size(); ++p) out[perm[p]] = sign[p] * r[p];
        return out;
    }
};

inline SignedPerm identity_perm(int dim) {
    SignedPerm g;
    g.perm.resize(dim);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.sign.assign(dim, 1);
    return g;
}

inline SignedPerm inverse(const SignedPerm& g) {
    SignedPerm inv;
    inv.perm.resize(g.perm.size());
    inv.sign.resize(g.perm.size());
    for (size_t p = 0; p < g.perm.size(); ++p) {
        inv.perm[g.perm[p]] = static_cast<int>(p);
        inv.sign[g.perm[p]] = g.sign[p];
    }
    return inv;
}

inline Subsystem apply(const SignedPerm& g, const Subsystem& s) {
    std::vector<Root> mapped;
    mapped.reserve(s.roots.size());
    for (const Root& r : s.roots) mapped.push_back(g.apply(r));
    return make_subsystem(*s.ambient, std::move(mapped));
}

// Simple reflections as signed permutations.  A reflection in e_i - e_j swaps
// the coordinates, one in e_i + e_j swaps them and negates both, and one in
// e_i or 2e_i negates the single coordinate.
inline std::vector<SignedPerm> weyl_generators(const RootSystem& g) {
    std::vector<SignedPerm> gens;
    for (const Root& a : g.simple) {
        SignedPerm w = identity_perm(g.dim);
        std::vector<int> sup;
        for (int p = 0; p < g.dim; ++p)
            if (a[p] != 0) sup.push_back(p);
        if (sup.size() == 1) {
            w.sign[sup[0]] = -1;
        } else {
            std::swap(w.perm[sup[0]], w.perm[sup[1]]);
            if (a[sup[0]] == a[sup[1]]) {
                w.sign[sup[0]] = -1;
                w.sign[sup[1]] = -1;
            }
        }
        gens.push_back(std::move(w));
    }
    return gens;
}

// Negates one coordinate (1-based).  This lies outside the Weyl group of D_n,
// where it realizes the diagram symmetry exchanging the two fork nodes.
inline Subsystem flip_coordinate(const Subsystem& s, int coord) {
    std::vector<Root> mapped;
    mapped.reserve(s.roots.size());
    for (Root r : s.roots) {
        r[coord - 1] = -r[coord - 1];
        mapped.push_back(std::move(r));
    }
    return make_subsystem(*s.ambient, std::move(mapped));
}

namespace detail {

// Per-coordinate fingerprint: sorted (|entry|, norm, support) over the roots
// touching the coordinate.  Invariant under signed permutations.
inline std::vector<std::array<long long, 3>> coord_profile(const std::vector<Root>& roots,
                                                           int dim, int p) {
    std::vector<std::array<long long, 3>> prof;
    for (const Root& r : roots) {
        if (r[p] == 0) continue;
        prof.push_back({std::abs(static_cast<long long>(r[p])), dot(r, r),
                        static_cast<long long>(support_size(r))});
    }
    std::sort(prof.begin(), prof.end());
    (void)dim;
    return prof;
}

struct ConjSearch {
    const RootSystem* ambient;
    const std::vector<Root>* src;  // sorted
    const std::vector<Root>* tgt;  // sorted
    bool allow_signs;
    bool even_signs;
    int dim;

    std::vector<int> search_order;           // source coords in supp(src)
    std::vector<std::vector<int>> cand;      // per search slot: target coords
    std::vector<std::vector<int>> touching;  // roots of src touching coord p

    std::vector<int> img;   // coord -> target coord or -1
    std::vector<int> sgn;   // coord -> +-1
    std::vector<char> used; // target coord taken
    std::vector<int> remaining;  // per src root: unassigned support coords

    std::optional<SignedPerm> result;

    bool root_image_ok(int root_idx) const {
        const Root& r = (*src)[root_idx];
        Root out(dim, 0);
        for (int p = 0; p < dim; ++p)
            if (r[p] != 0) out[img[p]] = sgn[p] * r[p];
        return std::binary_search(tgt->begin(), tgt->end(), out);
    }

    void backtrack(size_t slot) {
        if (result) return;
        if (slot == search_order.size()) {
            // All support coordinates placed and all root images verified.
            std::vector<int> save_img = img, save_sgn = sgn;
            finish_checked(even_signs);
            if (!result) { img = save_img; sgn = save_sgn; }
            return;
        }
        const int p = search_order[slot];
        for (int q : cand[slot]) {
            if (used[q]) continue;
            for (int s : allow_signs ? std::vector<int>{1, -1} : std::vector<int>{1}) {
                img[p] = q;
                sgn[p] = s;
                used[q] = 1;
                bool ok = true;
                for (int ri : touching[p]) {
                    if (--remaining[ri] == 0 && !root_image_ok(ri)) ok = false;
                }
                if (ok) backtrack(slot + 1);
                for (int ri : touching[p]) ++remaining[ri];
                used[q] = 0;
                img[p] = -1;
                if (result) return;
            }
        }
    }

    void finish_checked(bool parity) {
        std::vector<int> free_src, free_tgt;
        for (int p = 0; p < dim; ++p)
            if (img[p] < 0) free_src.push_back(p);
        for (int q = 0; q < dim; ++q)
            if (!used[q]) free_tgt.push_back(q);
        for (size_t k = 0; k < free_src.size(); ++k) {
            img[free_src[k]] = free_tgt[k];
            sgn[free_src[k]] = 1;
        }
        if (parity) {
            int prod = 1;
            for (int p = 0; p < dim; ++p) prod *= sgn[p];
            if (prod < 0) {
                if (free_src.empty()) return;  // parity obstructed on this branch
                sgn[free_src[0]] = -1;
            }
        }
        SignedPerm g;
        g.perm = img;
        g.sign = sgn;
        result = g;
    }
};

}  // namespace detail

// Search for an ambient Weyl group element mapping s onto t (as root sets).
// Returns a witness when one exists.
inline std::optional<SignedPerm> weyl_conjugate(const Subsystem& s, const Subsystem& t) {
    if (s.ambient->family != t.ambient->family || s.ambient->rank != t.ambient->rank)
        throw std::invalid_argument("weyl_conjugate: subsystems of different ambients");
    const RootSystem& g = *s.ambient;
    if (s.roots.size() != t.roots.size()) return std::nullopt;
    if (s.roots.empty()) return identity_perm(g.dim);
    if (classify_subsystem(s) != classify_subsystem(t)) return std::nullopt;

    std::vector<std::vector<std::array<long long, 3>>> prof_s(g.dim), prof_t(g.dim);
    for (int p = 0; p < g.dim; ++p) {
        prof_s[p] = detail::coord_profile(s.roots, g.dim, p);
        prof_t[p] = detail::coord_profile(t.roots, g.dim, p);
    }
    {
        auto ms = prof_s, mt = prof_t;
        std::sort(ms.begin(), ms.end());
        std::sort(mt.begin(), mt.end());
        if (ms != mt) return std::nullopt;
    }

    detail::ConjSearch cs;
    cs.ambient = &g;
    cs.src = &s.roots;
    cs.tgt = &t.roots;
    cs.allow_signs = (g.family != Family::A);
    cs.even_signs = (g.family == Family::D);
    cs.dim = g.dim;
    for (int p = 0; p < g.dim; ++p)
        if (!prof_s[p].empty()) cs.search_order.push_back(p);
    // Most-constrained first: more touching roots prune earlier.
    std::stable_sort(cs.search_order.begin(), cs.search_order.end(),
                     [&](int a, int b) { return prof_s[a].size() > prof_s[b].size(); });
    cs.cand.resize(cs.search_order.size());
    for (size_t k = 0; k < cs.search_order.size(); ++k)
        for (int q = 0; q < g.dim; ++q)
            if (prof_t[q] == prof_s[cs.search_order[k]]) cs.cand[k].push_back(q);
    cs.touching.assign(g.dim, {});
    for (size_t ri = 0; ri < s.roots.size(); ++ri)
        for (int p = 0; p < g.dim; ++p)
            if (s.roots[ri][p] != 0) cs.touching[p].push_back(static_cast<int>(ri));
    cs.img.assign(g.dim, -1);
    cs.sgn.assign(g.dim, 1);
    cs.used.assign(g.dim, 0);
    cs.remaining.resize(s.roots.size());
    for (size_t ri = 0; ri < s.roots.size(); ++ri)
        cs.remaining[ri] = support_size(s.roots[ri]);
    cs.backtrack(0);
    return cs.result;
}

}  // namespace dcoset
