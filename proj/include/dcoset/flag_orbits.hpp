// flag_orbits.hpp - flags of totally singular subspaces over F_q, orbit
// counting under a matrix group, and the growth-vs-boundedness verdict.
#pragma once

#include <chrono>
#include <unordered_map>

#include "matrix_groups.hpp"

namespace dcoset {

// ---------------------------------------------------------------------------
// Budgets
// ---------------------------------------------------------------------------

struct OracleBudget {
    long long max_flags = 1'000'000;
    double max_seconds = 60.0;
};

struct oracle_budget_error : std::runtime_error {
    long long seen = 0;
    explicit oracle_budget_error(const std::string& what, long long n = 0)
        : std::runtime_error(what), seen(n) {}
};

namespace detail {

struct Deadline {
    std::chrono::steady_clock::time_point end;
    explicit Deadline(double seconds)
        : end(std::chrono::steady_clock::now() +
              std::chrono::microseconds(static_cast<long long>(seconds * 1e6))) {}
    bool exceeded() const { return std::chrono::steady_clock::now() > end; }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Flag sets
// ---------------------------------------------------------------------------

// Flags stored as concatenated canonical basis matrices, one part per crossed
// node, in ascending order of the crossed nodes.
struct FlagSet {
    ParabolicSpec parabolic;
    std::vector<int> dims;
    int ambient_dim = 0;
    std::vector<std::string> keys;
    std::unordered_map<std::string, int> index;

    long long size() const { return static_cast<long long>(keys.size()); }

    void insert(std::string key) {
        auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(keys.size()));
        if (fresh) keys.push_back(it->first);
    }
};

namespace detail {

// Split a concatenated flag key back into its part matrices.
inline std::vector<FMat> split_flag_key(const std::string& key, const std::vector<int>& dims,
                                        int ambient_dim) {
    std::vector<FMat> parts;
    size_t at = 0;
    for (int d : dims) {
        FMat m(d, ambient_dim);
        at += 2;  // rows/cols header bytes written by mat_key
        for (auto& v : m.a) v = static_cast<uint8_t>(key[at++]);
        parts.push_back(std::move(m));
    }
    return parts;
}

inline std::string join_flag_key(const std::vector<FMat>& parts) {
    std::string key;
    for (const FMat& p : parts) key += mat_key(p);
    return key;
}

// dim(rowspace(a) meet rowspace(b)) via the rank of the stacked matrix.
inline int intersection_dim(const PrimeField& f, const FMat& a, const FMat& b) {
    FMat stack(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), stack.a.begin());
    std::copy(b.a.begin(), b.a.end(), stack.a.begin() + a.a.size());
    return a.rows + b.rows - mat_rank(f, stack);
}

// Class of a maximal totally singular space in a D ambient: the parity of its
// intersection codimension against the reference space e_1..e_n.  The
// reference has parity 0, and the last-node parabolic is its stabilizer.
inline int dn_class_parity(const FormedSpace& s, const FMat& w) {
    FMat ref(s.rank, s.dim);
    for (int i = 1; i <= s.rank; ++i) ref.at(i - 1, s.e_index(i)) = 1;
    return (s.rank - intersection_dim(s.field, w, ref)) % 2;
}

// Dimensions of the flag parts for a crossed-node set, with the parity class
// recorded for parts that are maximal spaces of a D ambient.
struct FlagShape {
    std::vector<int> dims;
    std::vector<int> fork_parity;  // -1 for ordinary chain parts
};

inline FlagShape flag_shape(const FormedSpace& s, const ParabolicSpec& p) {
    FlagShape shape;
    for (int node : p.crossed) {
        if (node < 1 || node > s.rank)
            throw std::invalid_argument("crossed node outside the diagram");
        if (s.family == Family::D && node >= s.rank - 1) {
            shape.dims.push_back(s.rank);
            shape.fork_parity.push_back(node == s.rank ? 0 : 1);
        } else {
            if (node > s.witt)
                throw std::invalid_argument("crossed node exceeds the Witt index");
            shape.dims.push_back(node);
            shape.fork_parity.push_back(-1);
        }
    }
    return shape;
}

// Orbit of a seed subspace under the generators, in canonical form.  Also
// serves as the transitivity check for the ambient group: the caller compares
// the orbit size against the closed-form point count.
inline std::vector<FMat> subspace_orbit(const FormedSpace& s, const std::vector<FMat>& gens,
                                        const FMat& seed, const OracleBudget& budget,
                                        const Deadline& deadline) {
    std::vector<FMat> transposed;
    for (const FMat& g : gens) transposed.push_back(transpose(g));
    std::vector<FMat> out;
    std::unordered_map<std::string, int> seen;
    out.push_back(row_space_canon(s.field, seed));
    seen.emplace(mat_key(out.front()), 0);
    long long steps = 0;
    for (size_t head = 0; head < out.size(); ++head) {
        const FMat w = out[head];
        for (const FMat& gt : transposed) {
            FMat img = row_space_canon(s.field, mat_mul(s.field, w, gt));
            if (seen.emplace(mat_key(img), 1).second) {
                if (static_cast<long long>(out.size()) >= budget.max_flags)
                    throw oracle_budget_error("flag budget exceeded",
                                              static_cast<long long>(out.size()));
                out.push_back(std::move(img));
            }
            if ((++steps & 0xfff) == 0 && deadline.exceeded())
                throw oracle_budget_error("time budget exceeded",
                                          static_cast<long long>(out.size()));
        }
    }
    return out;
}

// All k-dimensional subspaces of F_q^m as reduced-echelon basis matrices,
// visited in place.
template <class Fn>
void for_each_subspace_rec(const PrimeField& f, int m, int k, int col, int placed, FMat& work,
                           Fn&& fn) {
    if (col == m) {
        if (placed == k) fn(work);
        return;
    }
    if (m - col < k - placed) return;
    if (placed < k) {
        work.at(placed, col) = 1;
        for_each_subspace_rec(f, m, k, col + 1, placed + 1, work, fn);
        work.at(placed, col) = 0;
    }
    if (placed == 0) {
        for_each_subspace_rec(f, m, k, col + 1, 0, work, fn);
        return;
    }
    // Non-pivot column: the rows already placed take every field value.
    long long total = 1;
    for (int r = 0; r < placed; ++r) total *= f.q;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int r = 0; r < placed; ++r) {
            work.at(r, col) = static_cast<uint8_t>(c % f.q);
            c /= f.q;
        }
        for_each_subspace_rec(f, m, k, col + 1, placed, work, fn);
    }
    for (int r = 0; r < placed; ++r) work.at(r, col) = 0;
}

template <class Fn>
void for_each_subspace(const PrimeField& f, int m, int k, Fn&& fn) {
    FMat work(k, m);
    for_each_subspace_rec(f, m, k, 0, 0, work, fn);
}

inline std::vector<FMat> all_subspaces(const PrimeField& f, int m, int k, long long limit) {
    if (gaussian_binomial(f.q, m, k) > limit)
        throw oracle_budget_error("flag budget exceeded", gaussian_binomial(f.q, m, k));
    std::vector<FMat> out;
    for_each_subspace(f, m, k, [&out](const FMat& w) { out.push_back(w); });
    return out;
}

// Chains W_1 < W_2 < ... inside the row space of region, with the given
// ascending dimensions.  Each chain is returned smallest part first.
inline void nested_chains(const PrimeField& f, const FMat& region, const std::vector<int>& dims,
                          long long limit, std::vector<std::vector<FMat>>& out) {
    if (dims.empty()) {
        out.push_back({});
        return;
    }
    const int top = dims.back();
    const std::vector<int> rest(dims.begin(), dims.end() - 1);
    for (const FMat& pick : all_subspaces(f, region.rows, top, limit)) {
        const FMat sub = row_space_canon(f, mat_mul(f, pick, region));
        std::vector<std::vector<FMat>> inner;
        nested_chains(f, sub, rest, limit, inner);
        for (auto& chain : inner) {
            chain.push_back(sub);
            out.push_back(std::move(chain));
            if (static_cast<long long>(out.size()) > limit)
                throw oracle_budget_error("flag budget exceeded",
                                          static_cast<long long>(out.size()));
        }
    }
}

// The unique maximal totally singular space other than w containing the
// hyperplane u of w.  It lies in u-perp and has the opposite parity class.
inline FMat partner_maximal_space(const FormedSpace& s, const FMat& u, const FMat& w) {
    const PrimeField& f = s.field;
    FMat pairing = mat_mul(f, u, s.bilinear);
    FMat perp = right_kernel(f, pairing);
    const long long combos = pow_ll(f.q, perp.rows);
    for (long long code = 1; code < combos; ++code) {
        FVec v(s.dim, 0);
        long long c = code;
        for (int r = 0; r < perp.rows; ++r) {
            const int coef = static_cast<int>(c % f.q);
            c /= f.q;
            if (coef == 0) continue;
            for (int col = 0; col < s.dim; ++col)
                v[col] = f.add(v[col], f.mul(static_cast<uint8_t>(coef), perp.at(r, col)));
        }
        if (!is_singular_vector(s, v)) continue;
        FMat stack(u.rows + 1, s.dim);
        std::copy(u.a.begin(), u.a.end(), stack.a.begin());
        for (int col = 0; col < s.dim; ++col) stack.at(u.rows, col) = v[col];
        FMat cand = row_space_canon(f, stack);
        if (cand.rows != u.rows + 1) continue;  // v was inside u
        if (cand == w) continue;
        if (!is_totally_singular(s, cand)) continue;
        if (dn_class_parity(s, cand) == dn_class_parity(s, w))
            throw std::logic_error("partner space landed in the same parity class");
        return cand;
    }
    throw std::logic_error("no partner maximal space found");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// All flags of totally singular subspaces with shapes given by the crossed
// nodes.  The largest part comes from the orbit of a standard seed under the
// ambient group, validated against the closed-form count; smaller parts nest
// inside it.  In a D ambient the two end nodes give maximal spaces of the two
// parity classes, and crossing both pairs each even-class space with the
// odd-class spaces meeting it in a hyperplane.
inline FlagSet enumerate_flags(const FormedSpace& s, const ParabolicSpec& p,
                               const OracleBudget& budget = {}) {
    FlagSet flags;
    flags.parabolic = p;
    flags.ambient_dim = s.dim;
    if (p.crossed.empty()) {
        flags.insert("");
        return flags;
    }
    const detail::FlagShape shape = detail::flag_shape(s, p);
    flags.dims = shape.dims;
    const detail::Deadline deadline(budget.max_seconds);

    const int top = shape.dims.back();
    const bool top_is_fork = shape.fork_parity.back() >= 0;
    const bool both_forks =
        shape.fork_parity.size() >= 2 && shape.fork_parity[shape.fork_parity.size() - 2] >= 0;
    long long expected_tops = ts_subspace_count(s, top);
    if (top_is_fork) expected_tops /= 2;  // one parity class
    if (expected_tops > budget.max_flags)
        throw oracle_budget_error("flag budget exceeded", expected_tops);

    const MatrixGroupInstance ambient = build_ambient_instance(s);

    // Seed for the largest part; for a single crossed fork node, of the
    // requested class, and with both forks crossed, of the even class.
    FMat seed(top, s.dim);
    if (s.family == Family::A)
        for (int i = 0; i < top; ++i) seed.at(i, i) = 1;
    else
        for (int i = 1; i <= top; ++i) seed.at(i - 1, s.e_index(i)) = 1;
    if (top_is_fork && !both_forks && shape.fork_parity.back() == 1) {
        seed.at(top - 1, s.e_index(top)) = 0;
        seed.at(top - 1, s.f_index(top)) = 1;
    }
    const std::vector<FMat> tops =
        detail::subspace_orbit(s, ambient.gens, seed, budget, deadline);
    if (static_cast<long long>(tops.size()) != expected_tops)
        throw std::logic_error("enumerated top-space count disagrees with the closed form");

    // Chain dimensions below the top part (below both parts for a fork pair).
    std::vector<int> chain(shape.dims.begin(), shape.dims.end() - (both_forks ? 2 : 1));

    const PrimeField& f = s.field;
    for (const FMat& w : tops) {
        if (both_forks) {
            for (const FMat& hyp : detail::all_subspaces(f, top, top - 1, budget.max_flags)) {
                const FMat u = row_space_canon(f, mat_mul(f, hyp, w));
                const FMat odd = detail::partner_maximal_space(s, u, w);
                std::vector<std::vector<FMat>> chains;
                detail::nested_chains(f, u, chain, budget.max_flags, chains);
                for (auto& parts : chains) {
                    parts.push_back(odd);
                    parts.push_back(w);
                    flags.insert(detail::join_flag_key(parts));
                    if (flags.size() > budget.max_flags)
                        throw oracle_budget_error("flag budget exceeded", flags.size());
                }
            }
        } else {
            std::vector<std::vector<FMat>> chains;
            detail::nested_chains(f, w, chain, budget.max_flags, chains);
            for (auto& parts : chains) {
                parts.push_back(w);
                flags.insert(detail::join_flag_key(parts));
                if (flags.size() > budget.max_flags)
                    throw oracle_budget_error("flag budget exceeded", flags.size());
            }
        }
        if (deadline.exceeded()) throw oracle_budget_error("time budget exceeded", flags.size());
    }
    return flags;
}

// One-dimensional spaces spanned by non-singular vectors, packaged as a flag
// set so the same orbit counter applies.  These are the definite points of an
// orthogonal space.
inline FlagSet enumerate_definite_1spaces(const FormedSpace& s, const OracleBudget& budget = {}) {
    if (!s.has_quadratic)
        throw std::invalid_argument("definite points need a quadratic form");
    FlagSet flags;
    flags.dims = {1};
    flags.ambient_dim = s.dim;
    const detail::Deadline deadline(budget.max_seconds);
    for (const FMat& line : detail::all_subspaces(s.field, s.dim, 1, kCountCap)) {
        FVec v(line.a.begin(), line.a.end());
        if (is_singular_vector(s, v)) continue;
        flags.insert(mat_key(line));
        if (flags.size() > budget.max_flags)
            throw oracle_budget_error("flag budget exceeded", flags.size());
        if ((flags.size() & 0xfff) == 0 && deadline.exceeded())
            throw oracle_budget_error("time budget exceeded", flags.size());
    }
    return flags;
}

// ---------------------------------------------------------------------------
// Orbit counting
// ---------------------------------------------------------------------------

struct OrbitReport {
    int q = 0;
    long long point_count = 0;
    long long orbit_count = 0;
    std::vector<long long> orbit_sizes;  // ascending
    std::vector<int> orbit_root;         // representative flag id per flag
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

// Orbit partition of a flag set under the group generators, by union-find
// over one generator application per (flag, generator) pair.  The generators
// must map the flag set into itself.
inline OrbitReport count_orbits(const FormedSpace& s, const MatrixGroupInstance& group,
                                const FlagSet& flags) {
    OrbitReport rep;
    rep.q = s.field.q;
    rep.point_count = flags.size();
    detail::UnionFind uf(flags.keys.size());
    std::vector<FMat> transposed;
    for (const FMat& g : group.gens) transposed.push_back(transpose(g));
    for (size_t i = 0; i < flags.keys.size(); ++i) {
        const std::vector<FMat> parts =
            detail::split_flag_key(flags.keys[i], flags.dims, flags.ambient_dim);
        for (const FMat& gt : transposed) {
            std::vector<FMat> image;
            image.reserve(parts.size());
            for (const FMat& part : parts)
                image.push_back(row_space_canon(s.field, mat_mul(s.field, part, gt)));
            const auto it = flags.index.find(detail::join_flag_key(image));
            if (it == flags.index.end())
                throw std::logic_error("a generator of " + group.label +
                                       " does not preserve the flag set");
            uf.unite(static_cast<int>(i), it->second);
        }
    }
    std::unordered_map<int, long long> sizes;
    rep.orbit_root.resize(flags.keys.size());
    for (size_t i = 0; i < flags.keys.size(); ++i) {
        rep.orbit_root[i] = uf.find(static_cast<int>(i));
        ++sizes[rep.orbit_root[i]];
    }
    for (const auto& [root, size] : sizes) rep.orbit_sizes.push_back(size);
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    rep.orbit_count = static_cast<long long>(rep.orbit_sizes.size());
    return rep;
}

// ---------------------------------------------------------------------------
// Growth test over a prime list
// ---------------------------------------------------------------------------

enum class OracleVerdict : char { Bounded, Growing, Inconclusive, Unsupported };

inline std::string to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Bounded: return "bounded";
        case OracleVerdict::Growing: return "growing";
        case OracleVerdict::Inconclusive: return "inconclusive";
        case OracleVerdict::Unsupported: return "unsupported";
    }
    return "?";
}

struct StabilizationReport {
    std::vector<int> q_run;
    std::vector<long long> counts;
    std::vector<int> q_unsupported;
    std::vector<int> q_over_budget;
    std::vector<std::string> notes;
    std::vector<OrbitReport> reports;
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    bool within_band = false;
    std::string realization;
};

// Orbit counts are evidence, not proof: a constant tail reads as Bounded and
// strictly increasing counts read as Growing.  The first entry gets slack when
// three or more counts exist, because q = 2 collapses square classes.
inline OracleVerdict stabilization_verdict(const std::vector<long long>& counts) {
    if (counts.size() < 2) return OracleVerdict::Inconclusive;
    const size_t from = counts.size() >= 3 ? 1 : 0;
    bool constant_tail = true;
    for (size_t i = from + 1; i < counts.size(); ++i)
        if (counts[i] != counts[from]) constant_tail = false;
    if (constant_tail) return OracleVerdict::Bounded;
    bool increasing = true;
    for (size_t i = 1; i < counts.size(); ++i)
        if (counts[i] <= counts[i - 1]) increasing = false;
    if (increasing) return OracleVerdict::Growing;
    return OracleVerdict::Inconclusive;
}

inline StabilizationReport stabilization_test(Family fam, int rank, const SubgroupSpec& x,
                                              const ParabolicSpec& p,
                                              const std::vector<int>& q_list,
                                              const OracleBudget& budget = {}) {
    StabilizationReport rep;
    for (int q : q_list) {
        try {
            const FormedSpace space = build_formed_space(fam, rank, q);
            const MatrixGroupInstance group = build_subgroup_instance(space, x);
            rep.realization = group.realization;
            const FlagSet flags = enumerate_flags(space, p, budget);
            OrbitReport orbits = count_orbits(space, group, flags);
            rep.q_run.push_back(q);
            rep.counts.push_back(orbits.orbit_count);
            rep.reports.push_back(std::move(orbits));
        } catch (const oracle_unsupported_error& e) {
            rep.q_unsupported.push_back(q);
            rep.notes.push_back("q=" + std::to_string(q) + " unsupported: " + e.what());
        } catch (const oracle_budget_error& e) {
            rep.q_over_budget.push_back(q);
            rep.notes.push_back("q=" + std::to_string(q) + " over budget: " + e.what());
        }
    }
    // Nothing ran: Unsupported when every prime was rejected outright,
    // Inconclusive when at least one merely blew the budget.
    if (rep.counts.empty()) {
        rep.verdict = !rep.q_unsupported.empty() && rep.q_over_budget.empty()
                          ? OracleVerdict::Unsupported
                          : OracleVerdict::Inconclusive;
        return rep;
    }
    // A prime dropped for budget leaves the scheduled comparison incomplete;
    // the surviving counts are reported but never read as a verdict.
    rep.verdict = rep.q_over_budget.empty() ? stabilization_verdict(rep.counts)
                                            : OracleVerdict::Inconclusive;
    if (!rep.counts.empty()) {
        const size_t from = rep.counts.size() >= 3 ? 1 : 0;
        long long lo = rep.counts[from], hi = rep.counts[from];
        for (size_t i = from; i < rep.counts.size(); ++i) {
            lo = std::min(lo, rep.counts[i]);
            hi = std::max(hi, rep.counts[i]);
        }
        rep.within_band = hi <= 2 * lo;
    }
    return rep;
}

}  // namespace dcoset
