// property_checks.hpp - finite-field verification of the projection identities,
// the lasso dimension bound, and the reduction of orbit equivalence to the
// first block of an orthogonal decomposition.
#pragma once

#include "flag_orbits.hpp"

namespace dcoset {

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const PropertyCheck& c) { return c.passed; });
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.passed) out.push_back(c.name + ": " + c.detail);
        return out;
    }
};

namespace detail {

inline FVec decode_vector(const PrimeField& f, int dim, long long code) {
    FVec v(dim, 0);
    for (int i = 0; i < dim; ++i) {
        v[i] = static_cast<uint8_t>(code % f.q);
        code /= f.q;
    }
    return v;
}

// Basis of rowspace(w) meet the coordinate subspace of the mask: coefficient
// rows a with a.w supported inside the mask.
inline FMat rows_inside_mask(const PrimeField& f, const FMat& w, const std::vector<uint8_t>& mask) {
    std::vector<int> comp;
    for (int i = 0; i < w.cols; ++i)
        if (!mask[i]) comp.push_back(i);
    FMat restr(w.rows, static_cast<int>(comp.size()));
    for (int r = 0; r < w.rows; ++r)
        for (size_t c = 0; c < comp.size(); ++c) restr.at(r, static_cast<int>(c)) = w.at(r, comp[c]);
    const FMat coef = right_kernel(f, transpose(restr));
    return row_space_canon(f, mat_mul(f, coef, w));
}

// Projection of rowspace(w) onto the masked coordinates, as a canonical basis.
inline FMat project_rows(const PrimeField& f, const FMat& w, const std::vector<uint8_t>& mask) {
    FMat m = w;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (!mask[c]) m.at(r, c) = 0;
    return row_space_canon(f, m);
}

// All maximal totally singular subspaces, both parity classes in a D space,
// with the count checked against the closed form.  Uses orbit closure under
// the ambient group when one exists and falls back to a filtered scan for the
// degenerate char-2 odd orthogonal spaces.
inline std::vector<FMat> all_maximal_ts(const FormedSpace& s) {
    std::vector<FMat> out;
    if (!s.degenerate_polar && s.family != Family::A) {
        const OracleBudget budget{10'000'000, 600.0};
        const Deadline deadline(budget.max_seconds);
        const MatrixGroupInstance ambient = build_ambient_instance(s);
        FMat seed(s.witt, s.dim);
        for (int i = 1; i <= s.witt; ++i) seed.at(i - 1, s.e_index(i)) = 1;
        out = subspace_orbit(s, ambient.gens, seed, budget, deadline);
        if (s.family == Family::D) {
            FMat other = seed;
            other.at(s.witt - 1, s.e_index(s.witt)) = 0;
            other.at(s.witt - 1, s.f_index(s.witt)) = 1;
            const std::vector<FMat> rest =
                subspace_orbit(s, ambient.gens, other, budget, deadline);
            out.insert(out.end(), rest.begin(), rest.end());
        }
    } else {
        for_each_subspace(s.field, s.dim, s.witt, [&](const FMat& w) {
            if (is_totally_singular(s, w)) out.push_back(w);
        });
    }
    if (static_cast<long long>(out.size()) != ts_subspace_count(s, s.witt))
        throw std::logic_error("maximal space enumeration disagrees with the closed form");
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Projection identities of an orthogonal decomposition
// ---------------------------------------------------------------------------

// For V = V1 perp V2 and all vector pairs: beta splits as beta_1 + beta_2 and
// Q as Q_1 + Q_2 across the projections, and on singular vectors the value of
// Q on one projection determines the value on the other.  A cap > 0 limits
// the enumeration to the first `cap` vectors.
inline PropertyCheck check_projection_form_identities(const FormedSpace& s,
                                                      const SpaceDecomposition& dec,
                                                      long long cap = 0) {
    PropertyCheck check;
    check.name = "projection form identities on " + std::string(1, family_letter(s.family)) +
                 std::to_string(s.rank) + " q=" + std::to_string(s.field.q) +
                 " split=" + std::to_string(dec.split);
    const PrimeField& f = s.field;
    long long total = 1;
    for (int i = 0; i < s.dim; ++i) {
        total *= f.q;
        if (cap > 0 && total > cap) break;
    }
    if (cap > 0) total = std::min(total, cap);
    if (total > 5000)
        throw oracle_budget_error("vector pair enumeration too large; pass a sample cap", total);

    std::vector<FVec> vecs, p1, p2;
    vecs.reserve(total);
    for (long long code = 0; code < total; ++code) {
        vecs.push_back(detail::decode_vector(f, s.dim, code));
        p1.push_back(project(dec.mask1, vecs.back()));
        p2.push_back(project(dec.mask2, vecs.back()));
    }
    for (size_t a = 0; a < vecs.size(); ++a)
        for (size_t b = a; b < vecs.size(); ++b) {
            const uint8_t whole = beta(s, vecs[a], vecs[b]);
            const uint8_t split_sum = f.add(beta(s, p1[a], p1[b]), beta(s, p2[a], p2[b]));
            if (whole != split_sum) {
                check.detail = "beta does not split across the projections";
                return check;
            }
        }
    if (s.has_quadratic) {
        // Q splits, and on singular vectors Q(pi_1 v) pins Q(pi_2 v).
        std::vector<int> q2_of_q1(f.q, -1);
        for (size_t a = 0; a < vecs.size(); ++a) {
            const uint8_t q1 = quad(s, p1[a]), q2 = quad(s, p2[a]);
            if (quad(s, vecs[a]) != f.add(q1, q2)) {
                check.detail = "Q does not split across the projections";
                return check;
            }
            if (quad(s, vecs[a]) == 0) {
                if (q2_of_q1[q1] < 0) q2_of_q1[q1] = q2;
                if (q2_of_q1[q1] != q2) {
                    check.detail = "Q of the first projection fails to determine the second";
                    return check;
                }
            }
        }
    }
    check.passed = true;
    return check;
}

// ---------------------------------------------------------------------------
// Lasso dimension bound
// ---------------------------------------------------------------------------

// For every maximal totally singular W and each block V_i: the perp of the
// projected space inside V_i exceeds W meet V_i by 0 when dim V is even and
// by at most 1 when dim V is odd.
inline PropertyCheck check_lasso_bound(const FormedSpace& s, const SpaceDecomposition& dec) {
    PropertyCheck check;
    check.name = "lasso dimension bound on " + std::string(1, family_letter(s.family)) +
                 std::to_string(s.rank) + " q=" + std::to_string(s.field.q) +
                 " split=" + std::to_string(dec.split);
    if (!s.symplectic && !s.has_quadratic) {
        check.detail = "needs a formed space";
        return check;
    }
    const PrimeField& f = s.field;
    const int parity = s.dim % 2;
    for (const FMat& w : detail::all_maximal_ts(s)) {
        for (const auto* mask : {&dec.mask1, &dec.mask2}) {
            const FMat proj = detail::project_rows(f, w, *mask);
            const FMat inter = detail::rows_inside_mask(f, w, *mask);
            // perp of proj within the block: kernel of the pairing against
            // proj, restricted to the block coordinates.
            const FMat pairing = mat_mul(f, proj, s.bilinear);
            std::vector<int> cols;
            for (int c = 0; c < s.dim; ++c)
                if ((*mask)[c]) cols.push_back(c);
            FMat restricted(proj.rows, static_cast<int>(cols.size()));
            for (int r = 0; r < proj.rows; ++r)
                for (size_t c = 0; c < cols.size(); ++c)
                    restricted.at(r, static_cast<int>(c)) = pairing.at(r, cols[c]);
            const int perp_dim = static_cast<int>(cols.size()) - mat_rank(f, restricted);
            const int quotient = perp_dim - inter.rows;
            const bool ok = parity == 0 ? quotient == 0 : (quotient == 0 || quotient == 1);
            if (!ok) {
                check.detail = "quotient dimension " + std::to_string(quotient) +
                               " outside the bound";
                return check;
            }
        }
    }
    check.passed = true;
    return check;
}

// ---------------------------------------------------------------------------
// Reduction of orbit equivalence to the first block
// ---------------------------------------------------------------------------

// With X = X1 x Cl(V2), Cl(V2) the full form-preserving group of the second
// block: two maximal totally singular spaces lie in one X-orbit exactly when
// the pairs (W meet V1, pi_1 W) lie in one X1-orbit.  Checked as equality of
// the two partitions of the space list.
inline PropertyCheck check_first_block_reduction(const FormedSpace& s,
                                                 const SpaceDecomposition& dec,
                                                 const std::vector<FMat>& x1_gens,
                                                 bool full_second_block = true) {
    PropertyCheck check;
    check.name = "first-block orbit reduction on " + std::string(1, family_letter(s.family)) +
                 std::to_string(s.rank) + " q=" + std::to_string(s.field.q) +
                 " split=" + std::to_string(dec.split) +
                 (x1_gens.empty() ? " (trivial X1)" : " (full X1)") +
                 (full_second_block ? "" : " (connected second block)");
    const PrimeField& f = s.field;

    FlagSet spaces;
    spaces.dims = {s.witt};
    spaces.ambient_dim = s.dim;
    for (const FMat& w : detail::all_maximal_ts(s)) spaces.insert(mat_key(w));

    MatrixGroupInstance x;
    x.label = "X1 x Cl(V2)";
    x.realization = "block product";
    x.gens = x1_gens;
    MatrixGroupInstance block =
        full_second_block
            ? build_full_classical_block(s, dec.split + 1,
                                         s.family == Family::A ? s.dim : s.rank,
                                         s.family == Family::B)
            : MatrixGroupInstance{};
    if (!full_second_block) {
        // Connected generators only: no class-swapping element on V2.
        if (s.family == Family::D) {
            if (dec.split + 1 < s.rank)
                detail::append_orthogonal_d_block(s, dec.split + 1, s.rank, block.gens);
            else if (f.primitive() != 1)
                block.gens.push_back(detail::torus_pair(s, s.rank, f.primitive()));
        } else {
            throw std::invalid_argument("connected-block variant is for D spaces");
        }
    }
    for (const FMat& g : block.gens) x.gens.push_back(g);

    const OrbitReport under_x = count_orbits(s, x, spaces);

    // Pair key per space, then the X1-orbit partition of the pair set.
    std::vector<std::string> pair_key(spaces.keys.size());
    std::unordered_map<std::string, int> pair_id;
    std::vector<std::pair<FMat, FMat>> pairs;
    for (size_t i = 0; i < spaces.keys.size(); ++i) {
        const FMat w = detail::split_flag_key(spaces.keys[i], spaces.dims, s.dim).front();
        FMat inter = detail::rows_inside_mask(f, w, dec.mask1);
        FMat proj = detail::project_rows(f, w, dec.mask1);
        pair_key[i] = mat_key(inter) + "|" + mat_key(proj);
        if (pair_id.emplace(pair_key[i], static_cast<int>(pairs.size())).second)
            pairs.emplace_back(std::move(inter), std::move(proj));
    }
    detail::UnionFind uf(pairs.size());
    std::vector<FMat> transposed;
    for (const FMat& g : x1_gens) transposed.push_back(transpose(g));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (const FMat& gt : transposed) {
            const FMat a = row_space_canon(f, mat_mul(f, pairs[i].first, gt));
            const FMat b = row_space_canon(f, mat_mul(f, pairs[i].second, gt));
            const auto it = pair_id.find(mat_key(a) + "|" + mat_key(b));
            if (it == pair_id.end()) {
                check.detail = "X1 does not act on the pair set";
                return check;
            }
            uf.unite(static_cast<int>(i), it->second);
        }

    // The two partitions agree exactly when roots map bijectively.
    std::unordered_map<int, int> fwd, bwd;
    for (size_t i = 0; i < spaces.keys.size(); ++i) {
        const int ra = under_x.orbit_root[i];
        const int rb = uf.find(pair_id.at(pair_key[i]));
        const auto [fit, fnew] = fwd.emplace(ra, rb);
        if (!fnew && fit->second != rb) {
            check.detail = "one X-orbit meets two pair classes";
            return check;
        }
        const auto [bit, bnew] = bwd.emplace(rb, ra);
        if (!bnew && bit->second != ra) {
            check.detail = "one pair class meets two X-orbits";
            return check;
        }
    }
    check.passed = true;
    return check;
}

// ---------------------------------------------------------------------------
// Parity classes of a D space
// ---------------------------------------------------------------------------

// The two classes of maximal totally singular spaces partition the full set
// and any determinant minus-one form-preserving matrix swaps them.
inline PropertyCheck check_parity_classes(const FormedSpace& s) {
    PropertyCheck check;
    check.name = "parity classes on D" + std::to_string(s.rank) +
                 " q=" + std::to_string(s.field.q);
    if (s.family != Family::D) {
        check.detail = "needs a D space";
        return check;
    }
    const PrimeField& f = s.field;
    const std::vector<FMat> all = detail::all_maximal_ts(s);
    long long even = 0, odd = 0;
    for (const FMat& w : all) (detail::dn_class_parity(s, w) == 0 ? even : odd)++;
    if (even != odd || even + odd != static_cast<long long>(all.size())) {
        check.detail = "classes fail to halve the maximal spaces";
        return check;
    }
    const MatrixGroupInstance swap = build_full_classical_block(s, s.rank, s.rank, false);
    for (const FMat& g : swap.gens) {
        if (mat_det(f, g) != f.neg(1)) continue;
        const FMat gt = transpose(g);
        for (const FMat& w : all) {
            const FMat img = row_space_canon(f, mat_mul(f, w, gt));
            if (detail::dn_class_parity(s, img) == detail::dn_class_parity(s, w)) {
                check.detail = "a determinant minus-one matrix preserved a class";
                return check;
            }
        }
        check.passed = true;
        return check;
    }
    check.detail = "no determinant minus-one generator available";
    return check;
}

// ---------------------------------------------------------------------------
// Aggregate
// ---------------------------------------------------------------------------

// Runs the identity, lasso, and reduction checks over every decomposition of
// the space, plus the parity partition for D.  `samples` caps the vector
// enumeration of the identity check (0 = exhaustive).
inline PropertyReport verify_section3_properties(const FormedSpace& s, long long samples = 0) {
    PropertyReport rep;
    for (int split = 1; split < s.rank; ++split) {
        const SpaceDecomposition dec = decompose(s, split);
        rep.checks.push_back(check_projection_form_identities(s, dec, samples));
        rep.checks.push_back(check_lasso_bound(s, dec));
        rep.checks.push_back(check_first_block_reduction(s, dec, {}));
        const MatrixGroupInstance x1 = build_full_classical_block(s, 1, split, false);
        rep.checks.push_back(check_first_block_reduction(s, dec, x1.gens));
    }
    if (s.family == Family::D) rep.checks.push_back(check_parity_classes(s));
    return rep;
}

}  // namespace dcoset
