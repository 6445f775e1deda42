// subsystem.hpp - closed subsystems: hulls, canonical bases, type decomposition,
// dimension, and the Levi (rational closure) test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "root_system.hpp"

namespace dcoset {

struct Subsystem {
    const RootSystem* ambient = nullptr;
    std::vector<Root> roots;  // sorted, closed under negation
    std::vector<Root> base;   // canonical base: indecomposable positive roots

    bool contains(const Root& r) const {
        return std::binary_search(roots.begin(), roots.end(), r);
    }
    bool empty() const { return roots.empty(); }
    size_t size() const { return roots.size(); }

    bool operator==(const Subsystem& o) const { return roots == o.roots; }
    bool operator<(const Subsystem& o) const { return roots < o.roots; }
};

namespace detail {

// A linear functional that vanishes on no root: coordinates are bounded by 2,
// so base-5 weights separate every nonzero integer vector from zero.
inline long long positivity_key(const Root& r) {
    long long s = 0;
    for (int x : r) s = 5 * s + x;
    return s;
}

inline std::vector<Root> indecomposable_positives(const std::vector<Root>& roots) {
    std::vector<Root> pos;
    for (const Root& r : roots)
        if (positivity_key(r) > 0) pos.push_back(r);
    std::set<Root> pos_set(pos.begin(), pos.end());
    std::vector<Root> base;
    for (const Root& p : pos) {
        bool decomposable = false;
        for (const Root& a : pos) {
            if (a == p) continue;
            Root rest(p.size());
            for (size_t k = 0; k < p.size(); ++k) rest[k] = p[k] - a[k];
            if (pos_set.count(rest)) { decomposable = true; break; }
        }
        if (!decomposable) base.push_back(p);
    }
    return base;
}

}  // namespace detail

// Wrap an already-closed root set (sorted or not) as a Subsystem.
inline Subsystem make_subsystem(const RootSystem& ambient, std::vector<Root> roots) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Subsystem s;
    s.ambient = &ambient;
    s.base = detail::indecomposable_positives(roots);
    s.roots = std::move(roots);
    return s;
}

// All roots of the ambient system that are integer combinations of the given
// base vectors.  The base must consist of linearly independent ambient roots.
inline Subsystem closed_hull(const RootSystem& ambient, const std::vector<Root>& base) {
    for (const Root& b : base) {
        if (static_cast<int>(b.size()) != ambient.dim)
            throw std::invalid_argument("closed_hull: base vector of wrong dimension");
        if (!ambient.contains(b))
            throw std::invalid_argument("closed_hull: base vector is not an ambient root");
    }
    if (rank_of(base) != static_cast<int>(base.size()))
        throw std::invalid_argument("closed_hull: base vectors are linearly dependent");
    std::vector<Root> roots;
    for (const Root& r : ambient.roots)
        if (is_z_combination(base, r)) roots.push_back(r);
    return make_subsystem(ambient, std::move(roots));
}

inline Subsystem full_subsystem(const RootSystem& ambient) {
    return make_subsystem(ambient, ambient.roots);
}

inline Subsystem empty_subsystem(const RootSystem& ambient) {
    return make_subsystem(ambient, {});
}

// ---------------------------------------------------------------------------
// Type decomposition
// ---------------------------------------------------------------------------

struct TypeFactor {
    Family family;
    int rank;
    auto operator<=>(const TypeFactor&) const = default;
};

using TypeDecomposition = std::vector<TypeFactor>;  // sorted

struct Component {
    std::vector<Root> base;
    std::vector<Root> roots;
    TypeFactor type;
};

namespace detail {

inline TypeFactor classify_component(const std::vector<Root>& base) {
    const int k = static_cast<int>(base.size());
    if (k == 1) return {Family::A, 1};
    long long lo = dot(base[0], base[0]), hi = lo;
    for (const Root& b : base) {
        const long long n2 = dot(b, b);
        lo = std::min(lo, n2);
        hi = std::max(hi, n2);
    }
    if (lo != hi) {
        // Two lengths: B_k or C_k; at rank 2 the two coincide, written B_2.
        if (k == 2) return {Family::B, 2};
        int shorts = 0;
        for (const Root& b : base)
            if (dot(b, b) == lo) ++shorts;
        if (shorts == 1) return {Family::B, k};
        if (shorts == k - 1) return {Family::C, k};
        throw std::logic_error("classify_component: unrecognized two-length base");
    }
    // Simply laced: a chain is A_k, a fork is D_k; D_3 = A_3 never forks.
    int max_degree = 0;
    for (int i = 0; i < k; ++i) {
        int deg = 0;
        for (int j = 0; j < k; ++j)
            if (i != j && dot(base[i], base[j]) != 0) ++deg;
        max_degree = std::max(max_degree, deg);
    }
    if (max_degree >= 3) return {Family::D, k};
    return {Family::A, k};
}

}  // namespace detail

// Split into irreducible components; each ambient root of the subsystem lies
// in the rational span of exactly one component base.
inline std::vector<Component> components_of(const Subsystem& s) {
    const auto& base = s.base;
    const int k = static_cast<int>(base.size());
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && dot(base[v], base[j]) != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<Component> out(ncomp);
    for (int i = 0; i < k; ++i) out[comp[i]].base.push_back(base[i]);
    for (auto& c : out) {
        RatSpan span;
        for (const Root& b : c.base) span.add(b);
        for (const Root& r : s.roots)
            if (span.contains(r)) c.roots.push_back(r);
        c.type = detail::classify_component(c.base);
    }
    return out;
}

// Type decomposition with the degenerate identifications applied (D_3 is
// reported as A_3, D_2 splits into A_1 A_1 by itself).  Sorted by rank
// descending, then family letter.
inline TypeDecomposition classify_subsystem(const Subsystem& s) {
    TypeDecomposition d;
    for (const auto& c : components_of(s)) d.push_back(c.type);
    std::sort(d.begin(), d.end(), [](const TypeFactor& a, const TypeFactor& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.family < b.family;
    });
    return d;
}

inline std::string type_string(const TypeDecomposition& d) {
    if (d.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += '+';
        out += family_letter(d[i].family);
        out += std::to_string(d[i].rank);
    }
    return out;
}

inline bool is_type(const TypeDecomposition& d, std::initializer_list<TypeFactor> t) {
    return d == TypeDecomposition(t);
}

// dim = number of roots plus the rank of their span; the empty subsystem has
// dimension 0.
inline int dim_subsystem(const Subsystem& s) {
    if (s.roots.empty()) return 0;
    return static_cast<int>(s.roots.size()) + rank_of(s.roots);
}

// A subsystem is a Levi subsystem when it equals the ambient roots lying in
// its rational span.
inline bool is_levi_subsystem(const Subsystem& s) {
    RatSpan span;
    for (const Root& b : s.base) span.add(b);
    for (const Root& r : s.ambient->roots)
        if (span.contains(r) && !s.contains(r)) return false;
    return true;
}

// Intersection of a subsystem with an arbitrary sorted root set.
inline Subsystem intersect(const Subsystem& s, const std::vector<Root>& sorted_other) {
    std::vector<Root> out;
    std::set_intersection(s.roots.begin(), s.roots.end(), sorted_other.begin(),
                          sorted_other.end(), std::back_inserter(out));
    return make_subsystem(*s.ambient, std::move(out));
}

}  // namespace dcoset
