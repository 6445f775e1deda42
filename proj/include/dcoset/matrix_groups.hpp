// matrix_groups.hpp - F_q matrix realizations of the ambient group and its
// maximal rank subgroups, acting on the natural module of formed_space.hpp.
#pragma once

#include <unordered_set>

#include "formed_space.hpp"
#include "subgroups.hpp"

namespace dcoset {

// Raised where a (family, q) combination is excluded by design instead of
// being approximated; callers report Unsupported.
struct oracle_unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MatrixGroupInstance {
    std::string label;
    std::string realization;
    std::vector<FMat> gens;
};

namespace detail {

// ---------------------------------------------------------------------------
// Root subgroup elements x_alpha(t) in the natural module
// ---------------------------------------------------------------------------
// Pair indices i, j are the 1-based root coordinates; "column" mutations below
// read as basis maps, e.g. M[e(i)][e(j)] += t means e_j gains t e_i.

inline void add_entry(const FormedSpace& s, FMat& m, int row, int col, int val) {
    m.at(row, col) = s.field.reduce(m.at(row, col) + val);
}

// eps_i - eps_j, any family with hyperbolic pairs.
inline FMat x_eps_minus(const FormedSpace& s, int i, int j, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.e_index(i), s.e_index(j), t);
    add_entry(s, m, s.f_index(j), s.f_index(i), -t);
    return m;
}

// eps_i + eps_j; the symmetric form needs one minus sign, the alternating
// form none.
inline FMat x_eps_plus(const FormedSpace& s, int i, int j, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.e_index(j), s.f_index(i), t);
    add_entry(s, m, s.e_index(i), s.f_index(j), s.symplectic ? t : -t);
    return m;
}

inline FMat x_eps_plus_neg(const FormedSpace& s, int i, int j, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.f_index(j), s.e_index(i), t);
    add_entry(s, m, s.f_index(i), s.e_index(j), s.symplectic ? t : -t);
    return m;
}

// 2 eps_i (symplectic long root) and its negative.
inline FMat x_two_eps(const FormedSpace& s, int i, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.e_index(i), s.f_index(i), t);
    return m;
}

inline FMat x_two_eps_neg(const FormedSpace& s, int i, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.f_index(i), s.e_index(i), t);
    return m;
}

// eps_i (orthogonal short root) and its negative; moves the anisotropic line.
inline FMat x_eps_short(const FormedSpace& s, int i, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.d_index(), s.f_index(i), t);
    add_entry(s, m, s.e_index(i), s.f_index(i), -t * t);
    add_entry(s, m, s.e_index(i), s.d_index(), -2 * t);
    return m;
}

inline FMat x_eps_short_neg(const FormedSpace& s, int i, int t) {
    FMat m = identity_mat(s.dim);
    add_entry(s, m, s.d_index(), s.e_index(i), t);
    add_entry(s, m, s.f_index(i), s.e_index(i), -t * t);
    add_entry(s, m, s.f_index(i), s.d_index(), -2 * t);
    return m;
}

// Torus element scaling the i-th hyperbolic pair by (lambda, lambda^{-1}).
inline FMat torus_pair(const FormedSpace& s, int i, uint8_t lambda) {
    FMat m = identity_mat(s.dim);
    m.at(s.e_index(i), s.e_index(i)) = lambda;
    m.at(s.f_index(i), s.f_index(i)) = s.field.inv(lambda);
    return m;
}

// ---------------------------------------------------------------------------
// Simple-root generator sets per block
// ---------------------------------------------------------------------------

inline void append_symplectic_block(const FormedSpace& s, int c1, int c2,
                                    std::vector<FMat>& out) {
    for (int i = c1; i < c2; ++i) {
        out.push_back(x_eps_minus(s, i, i + 1, 1));
        out.push_back(x_eps_minus(s, i + 1, i, 1));
    }
    out.push_back(x_two_eps(s, c2, 1));
    out.push_back(x_two_eps_neg(s, c2, 1));
}

inline void append_orthogonal_d_block(const FormedSpace& s, int c1, int c2,
                                      std::vector<FMat>& out) {
    for (int i = c1; i < c2; ++i) {
        out.push_back(x_eps_minus(s, i, i + 1, 1));
        out.push_back(x_eps_minus(s, i + 1, i, 1));
    }
    out.push_back(x_eps_plus(s, c2 - 1, c2, 1));
    out.push_back(x_eps_plus_neg(s, c2 - 1, c2, 1));
    const uint8_t lambda = s.field.primitive();
    if (lambda != 1) out.push_back(torus_pair(s, c1, lambda));
}

inline void append_orthogonal_b_block(const FormedSpace& s, int c1, int c2,
                                      std::vector<FMat>& out) {
    for (int i = c1; i < c2; ++i) {
        out.push_back(x_eps_minus(s, i, i + 1, 1));
        out.push_back(x_eps_minus(s, i + 1, i, 1));
    }
    out.push_back(x_eps_short(s, c2, 1));
    out.push_back(x_eps_short_neg(s, c2, 1));
    const uint8_t lambda = s.field.primitive();
    if (lambda != 1) out.push_back(torus_pair(s, c1, lambda));
}

// ---------------------------------------------------------------------------
// GL factors
// ---------------------------------------------------------------------------

// Cyclic and adjacent-swap permutations, one transvection, one primitive
// diagonal: together they generate GL_k(F_q).
inline std::vector<FMat> gl_generators(const PrimeField& f, int k) {
    std::vector<FMat> gens;
    if (k >= 2) {
        FMat cyc(k, k);
        for (int j = 0; j < k; ++j) cyc.at((j + 1) % k, j) = 1;
        gens.push_back(cyc);
        if (k > 2) {
            FMat swp = identity_mat(k);
            swp.at(0, 0) = swp.at(1, 1) = 0;
            swp.at(0, 1) = swp.at(1, 0) = 1;
            gens.push_back(swp);
        }
        FMat tv = identity_mat(k);
        tv.at(0, 1) = 1;
        gens.push_back(tv);
    }
    const uint8_t lambda = f.primitive();
    if (lambda != 1) {
        FMat d = identity_mat(k);
        d.at(0, 0) = lambda;
        gens.push_back(d);
    }
    return gens;
}

// Embed g and g^{-T} on paired index lists (a linear factor acting on a pair
// of totally singular subspaces).
inline FMat embed_gl_pair(const FormedSpace& s, const std::vector<int>& e_idx,
                          const std::vector<int>& f_idx, const FMat& g) {
    const int k = g.rows;
    const FMat h = transpose(mat_inverse(s.field, g));
    FMat m = identity_mat(s.dim);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            m.at(e_idx[r], e_idx[c]) = g.at(r, c);
            m.at(f_idx[r], f_idx[c]) = h.at(r, c);
        }
    return m;
}

// Embed g on a plain coordinate block (A ambient).
inline FMat embed_gl_block(const FormedSpace& s, int c1, int c2, const FMat& g) {
    if (g.rows != c2 - c1 + 1) throw std::logic_error("block size mismatch");
    FMat m = identity_mat(s.dim);
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) m.at(c1 - 1 + r, c1 - 1 + c) = g.at(r, c);
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation and closure
// ---------------------------------------------------------------------------

// Every generator must satisfy M^T beta M = beta and preserve Q on the basis;
// with beta preserved the basis check extends to all of V.
inline bool preserves_forms(const FormedSpace& s, const FMat& m) {
    const FMat lhs = mat_mul(s.field, mat_mul(s.field, transpose(m), s.bilinear), m);
    if (!(lhs == s.bilinear)) return false;
    if (s.has_quadratic)
        for (int i = 0; i < s.dim; ++i) {
            const FVec b = basis_vector(s, i);
            if (quad(s, mat_vec(s.field, m, b)) != quad(s, b)) return false;
        }
    return true;
}

// Order of the generated matrix group by breadth-first closure.
inline long long group_order(const PrimeField& f, const std::vector<FMat>& gens,
                             long long cap = 1'000'000) {
    if (gens.empty()) return 1;
    std::unordered_set<std::string> seen;
    std::vector<FMat> frontier{identity_mat(gens.front().rows)};
    seen.insert(mat_key(frontier.front()));
    while (!frontier.empty()) {
        std::vector<FMat> next;
        for (const FMat& m : frontier)
            for (const FMat& g : gens) {
                FMat p = mat_mul(f, g, m);
                std::string key = mat_key(p);
                if (seen.insert(std::move(key)).second) {
                    next.push_back(std::move(p));
                    if (static_cast<long long>(seen.size()) > cap)
                        throw std::runtime_error("group closure exceeded the cap");
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

// The ambient group: GL_{n+1} for A, otherwise the split classical group
// generated by simple root subgroups; orthogonal ambients add a torus scaling
// so the F_q points cover SO, never the class-swapping full O.
inline MatrixGroupInstance build_ambient_instance(const FormedSpace& s) {
    if (s.degenerate_polar)
        throw oracle_unsupported_error(
            "odd orthogonal groups over F_2 have a degenerate polar form");
    MatrixGroupInstance inst;
    inst.label = std::string(1, family_letter(s.family)) + std::to_string(s.rank);
    switch (s.family) {
        case Family::A:
            inst.realization = "GL";
            for (const FMat& g : detail::gl_generators(s.field, s.dim))
                inst.gens.push_back(detail::embed_gl_block(s, 1, s.dim, g));
            break;
        case Family::C:
            inst.realization = "Sp (root subgroups)";
            detail::append_symplectic_block(s, 1, s.rank, inst.gens);
            break;
        case Family::B:
            inst.realization = "SO (root subgroups + torus)";
            detail::append_orthogonal_b_block(s, 1, s.rank, inst.gens);
            break;
        case Family::D:
            inst.realization = "SO (root subgroups + torus)";
            detail::append_orthogonal_d_block(s, 1, s.rank, inst.gens);
            break;
    }
    for (const FMat& g : inst.gens)
        if (!preserves_forms(s, g))
            throw std::logic_error("ambient generator breaks the forms");
    return inst;
}

// A maximal rank subgroup over F_q, block by block along the same coordinate
// placement that subsystem_of_X uses: GL factors act as g + g^{-T} on a pair
// of totally singular subspaces, symplectic/orthogonal factors by their root
// subgroups, torus coordinates by diagonal scalings.
inline MatrixGroupInstance build_subgroup_instance(const FormedSpace& s,
                                                   const SubgroupSpec& spec) {
    if (s.degenerate_polar)
        throw oracle_unsupported_error(
            "odd orthogonal groups over F_2 have a degenerate polar form");
    const SubgroupSpec x = normalize_spec(spec);
    if (x.ambient_family != s.family || x.ambient_rank != s.rank)
        throw std::invalid_argument("subgroup spec does not match the space");
    MatrixGroupInstance inst;
    inst.label = to_string(x);
    inst.realization = (s.family == Family::B || s.family == Family::D)
                           ? "SO (root subgroups + torus)"
                           : (s.family == Family::C ? "Sp (root subgroups)" : "GL");
    const detail::Shape sh = detail::shape_of(x);
    const detail::BlockLayout lay = detail::layout_of(x);
    const uint8_t lambda = s.field.primitive();

    if (s.family == Family::A) {
        for (const auto& [c1, c2] : lay.gl)
            for (const FMat& g : detail::gl_generators(s.field, c2 - c1 + 1))
                inst.gens.push_back(detail::embed_gl_block(s, c1, c2, g));
        if (lambda != 1)
            for (int c : lay.singles) {
                FMat m = identity_mat(s.dim);
                m.at(c - 1, c - 1) = lambda;
                inst.gens.push_back(m);
            }
    } else {
        const bool flip_active = s.family == Family::D && sh.a() >= 1 && sh.dd() == 0 &&
                                 sh.singles(Family::D) == 0;
        for (size_t b = 0; b < lay.gl.size(); ++b) {
            const auto [c1, c2] = lay.gl[b];
            const bool flip = flip_active && x.dn_class == DnClass::FlipLast &&
                              b + 1 == lay.gl.size();
            std::vector<int> e_idx, f_idx;
            for (int i = c1; i <= c2; ++i) {
                const bool swapped = flip && i == c2;
                e_idx.push_back(swapped ? s.f_index(i) : s.e_index(i));
                f_idx.push_back(swapped ? s.e_index(i) : s.f_index(i));
            }
            for (const FMat& g : detail::gl_generators(s.field, c2 - c1 + 1))
                inst.gens.push_back(detail::embed_gl_pair(s, e_idx, f_idx, g));
        }
        for (const auto& [c1, c2] : lay.cb)
            detail::append_symplectic_block(s, c1, c2, inst.gens);
        for (const auto& [c1, c2] : lay.db)
            detail::append_orthogonal_d_block(s, c1, c2, inst.gens);
        if (lambda != 1)
            for (int c : lay.singles) inst.gens.push_back(detail::torus_pair(s, c, lambda));
        if (sh.b_rank > 0)
            detail::append_orthogonal_b_block(s, s.rank - sh.b_rank + 1, s.rank, inst.gens);
    }
    for (const FMat& g : inst.gens)
        if (!preserves_forms(s, g))
            throw std::logic_error("subgroup generator breaks the forms for " + inst.label);
    return inst;
}

// The full form-preserving group of a block (identity elsewhere).  Used by
// the property checks that need Cl(V_2) including its class-swapping part:
// orthogonal blocks gain a hyperbolic swap or a reflection of the
// anisotropic line on top of the connected generators.
inline MatrixGroupInstance build_full_classical_block(const FormedSpace& s, int c1, int c2,
                                                      bool with_anisotropic_line) {
    MatrixGroupInstance inst;
    inst.label = "Cl(block)";
    inst.realization = "full form-preserving group of the block";
    if (s.family == Family::A) {
        for (const FMat& g : detail::gl_generators(s.field, c2 - c1 + 1))
            inst.gens.push_back(detail::embed_gl_block(s, c1, c2, g));
        return inst;
    }
    if (s.symplectic) {
        detail::append_symplectic_block(s, c1, c2, inst.gens);
        return inst;
    }
    if (with_anisotropic_line) {
        if (c1 <= c2) detail::append_orthogonal_b_block(s, c1, c2, inst.gens);
        FMat refl = identity_mat(s.dim);
        refl.at(s.d_index(), s.d_index()) = s.field.neg(1);
        inst.gens.push_back(refl);
    } else {
        if (c2 > c1)
            detail::append_orthogonal_d_block(s, c1, c2, inst.gens);
        else if (s.field.primitive() != 1)
            inst.gens.push_back(detail::torus_pair(s, c1, s.field.primitive()));
        FMat swap = identity_mat(s.dim);
        swap.at(s.e_index(c2), s.e_index(c2)) = 0;
        swap.at(s.f_index(c2), s.f_index(c2)) = 0;
        swap.at(s.e_index(c2), s.f_index(c2)) = 1;
        swap.at(s.f_index(c2), s.e_index(c2)) = 1;
        inst.gens.push_back(swap);
    }
    for (const FMat& g : inst.gens)
        if (!preserves_forms(s, g))
            throw std::logic_error("block generator breaks the forms");
    return inst;
}

}  // namespace dcoset
