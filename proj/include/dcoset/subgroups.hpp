// subgroups.hpp - reductive subgroups of maximal rank, parabolic specs, the
// embedded finiteness rules, and subsystem placement conventions.
#pragma once

#include <cassert>
#include <optional>
#include <sstream>

#include "weyl.hpp"

namespace dcoset {

enum class Flavor : char { LinearPair, Orthogonal, Symplectic, Torus };

// One factor of a maximal-rank subgroup.  Family A factors are GL blocks
// acting on a dual pair of totally singular subspaces; B/D are orthogonal,
// C symplectic.  Rank-0 factors and D_1 never survive normalization (they
// fold into the central torus).
struct FactorSpec {
    Family family;
    int rank;
    Flavor flavor;
    auto operator<=>(const FactorSpec&) const = default;
};

// The two placement classes of a trailing GL block in a D ambient whose GL
// blocks cover every coordinate.  FlipLast pairs the last block with the
// opposite singular space (the convention the CLI grammar pins); Plain keeps
// the standard pairing.  They are Weyl conjugate unless the ambient rank is
// even.
enum class DnClass : char { FlipLast, Plain };

struct SubgroupSpec {
    Family ambient_family;
    int ambient_rank = 0;
    std::vector<FactorSpec> factors;  // canonical order
    int central_torus_rank = 0;
    DnClass dn_class = DnClass::FlipLast;

    bool operator==(const SubgroupSpec&) const = default;
};

struct ParabolicSpec {
    std::vector<int> crossed;  // sorted 1-based node ids, nonempty

    bool maximal() const { return crossed.size() == 1; }
    int node() const { return crossed.front(); }
    bool operator==(const ParabolicSpec&) const = default;
};

enum class Finiteness : char { Finite, Infinite };

struct Verdict {
    Finiteness finiteness;
    std::string provenance;  // exactly one rule id of the embedded tables
};

// ---------------------------------------------------------------------------
// Normalization and validation
// ---------------------------------------------------------------------------

namespace detail {

struct Shape {
    std::vector<int> gl_ranks;  // >= 1 each
    std::vector<int> c_ranks;
    std::vector<int> d_ranks;   // >= 2 each
    int b_rank = 0;             // at most one B factor
    int torus = 0;              // central torus rank (includes GL centers)

    int a() const { return static_cast<int>(gl_ranks.size()); }
    int c() const { return static_cast<int>(c_ranks.size()); }
    int dd() const { return static_cast<int>(d_ranks.size()); }
    int b() const { return b_rank > 0 ? 1 : 0; }
    // Free torus coordinates (beyond the GL centers).
    int singles(Family amb) const {
        return amb == Family::A ? torus + 1 - a() : torus - a();
    }
    int blocks(Family amb) const { return a() + singles(amb); }  // A ambient
};

inline Shape shape_of(const SubgroupSpec& x) {
    Shape s;
    for (const auto& f : x.factors) {
        switch (f.family) {
            case Family::A: s.gl_ranks.push_back(f.rank); break;
            case Family::B: s.b_rank = f.rank; break;
            case Family::C: s.c_ranks.push_back(f.rank); break;
            case Family::D: s.d_ranks.push_back(f.rank); break;
        }
    }
    s.torus = x.central_torus_rank;
    return s;
}

// 1-based coordinate ranges of each block in placement order (the trailing B
// block, when present, owns the final b_rank coordinates).
struct BlockLayout {
    std::vector<std::pair<int, int>> gl;  // size rank+1 each
    std::vector<std::pair<int, int>> cb;
    std::vector<std::pair<int, int>> db;
    std::vector<int> singles;
    std::vector<int> firsts;  // first coordinate of every non-B block
};

inline BlockLayout layout_of(const SubgroupSpec& x) {
    const Shape s = shape_of(x);
    BlockLayout lay;
    int pos = 1;
    for (int r : s.gl_ranks) {
        lay.gl.push_back({pos, pos + r});
        pos += r + 1;
    }
    for (int r : s.c_ranks) {
        lay.cb.push_back({pos, pos + r - 1});
        pos += r;
    }
    for (int r : s.d_ranks) {
        lay.db.push_back({pos, pos + r - 1});
        pos += r;
    }
    for (int k = 0; k < s.singles(x.ambient_family); ++k) lay.singles.push_back(pos++);
    for (const auto& b : lay.gl) lay.firsts.push_back(b.first);
    for (const auto& b : lay.cb) lay.firsts.push_back(b.first);
    for (const auto& b : lay.db) lay.firsts.push_back(b.first);
    for (int c : lay.singles) lay.firsts.push_back(c);
    return lay;
}

}  // namespace detail

// Canonical factor order: family letter, then rank ascending.
inline void canonicalize_factors(std::vector<FactorSpec>& fs) {
    std::stable_sort(fs.begin(), fs.end(), [](const FactorSpec& a, const FactorSpec& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank < b.rank;
    });
}

// Normalize degenerate factors (A_0/B_0/C_0 vanish, D_1 is a torus line) and
// validate ranks, flavors, and the coordinate budget.
inline SubgroupSpec normalize_spec(SubgroupSpec x) {
    std::vector<FactorSpec> keep;
    for (auto f : x.factors) {
        if (f.rank < 0) throw std::invalid_argument("factor of negative rank");
        switch (f.family) {
            case Family::A:
                if (f.flavor != Flavor::LinearPair)
                    throw std::invalid_argument("A factors carry the linear-pair flavor");
                if (f.rank == 0) continue;  // GL_1 block: one torus coordinate
                break;
            case Family::B:
                if (f.flavor != Flavor::Orthogonal)
                    throw std::invalid_argument("B factors carry the orthogonal flavor");
                if (x.ambient_family != Family::B)
                    throw std::invalid_argument("B factors live in B ambients only");
                if (f.rank == 0) continue;
                break;
            case Family::C:
                if (f.flavor != Flavor::Symplectic)
                    throw std::invalid_argument("C factors carry the symplectic flavor");
                if (x.ambient_family != Family::C)
                    throw std::invalid_argument("C factors live in C ambients only");
                if (f.rank == 0) continue;
                break;
            case Family::D:
                if (f.flavor != Flavor::Orthogonal)
                    throw std::invalid_argument("D factors carry the orthogonal flavor");
                if (x.ambient_family != Family::B && x.ambient_family != Family::D)
                    throw std::invalid_argument("D factors live in B or D ambients only");
                if (f.rank == 0) throw std::invalid_argument("D_0 is not a factor");
                if (f.rank == 1) {  // SO_2 is exactly a rank-1 torus
                    ++x.central_torus_rank;
                    continue;
                }
                break;
        }
        keep.push_back(f);
    }
    if (x.ambient_family == Family::A)
        for (const auto& f : keep)
            if (f.family != Family::A)
                throw std::invalid_argument("A ambients admit GL factors only");
    int bcount = 0;
    for (const auto& f : keep)
        if (f.family == Family::B) ++bcount;
    if (bcount > 1) throw std::invalid_argument("at most one B factor is possible");
    x.factors = std::move(keep);
    canonicalize_factors(x.factors);

    detail::Shape s = detail::shape_of(x);
    const int n = x.ambient_rank;
    int ranksum = s.b_rank;
    for (int r : s.gl_ranks) ranksum += r;
    for (int r : s.c_ranks) ranksum += r;
    for (int r : s.d_ranks) ranksum += r;
    if (x.ambient_family == Family::A) {
        if (ranksum + x.central_torus_rank != n)
            throw std::invalid_argument("factor ranks plus torus rank must sum to the ambient rank");
        if (s.singles(Family::A) < 0)
            throw std::invalid_argument("torus rank below the number of GL blocks minus one");
    } else {
        if (ranksum + x.central_torus_rank != n)
            throw std::invalid_argument("factor ranks plus torus rank must sum to the ambient rank");
        if (s.singles(x.ambient_family) < 0)
            throw std::invalid_argument("torus rank below the number of GL centers");
    }
    // The placement class only distinguishes subgroups whose GL blocks cover
    // every coordinate of a D ambient.
    const bool two_classes = x.ambient_family == Family::D && s.a() >= 1 && s.dd() == 0 &&
                             s.b() == 0 && s.singles(Family::D) == 0;
    if (!two_classes) x.dn_class = DnClass::FlipLast;
    return x;
}

inline bool is_full_group(const SubgroupSpec& x) {
    if (x.factors.size() != 1 || x.central_torus_rank != 0) return false;
    const auto& f = x.factors[0];
    if (f.rank != x.ambient_rank) return false;
    if (x.ambient_family == Family::A) return f.family == Family::A;
    return f.family == x.ambient_family;
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

inline std::string to_string(const SubgroupSpec& x) {
    if (is_full_group(x)) return std::string(1, family_letter(x.ambient_family)) +
                                  std::to_string(x.ambient_rank);
    std::string out;
    auto append = [&out](const std::string& tok) {
        if (!out.empty()) out += '*';
        out += tok;
    };
    for (const auto& f : x.factors) {
        std::string tok(1, family_letter(f.family));
        tok += std::to_string(f.rank);
        if (f.family == Family::A && x.ambient_family != Family::A) tok += "[gl]";
        append(tok);
    }
    if (x.central_torus_rank > 0) append("T" + std::to_string(x.central_torus_rank));
    if (out.empty()) out = "T0";
    if (x.ambient_family == Family::D && x.dn_class == DnClass::Plain) out += "@plain";
    return out;
}

inline SubgroupSpec parse_subgroup(Family amb, int n, std::string text) {
    SubgroupSpec x;
    x.ambient_family = amb;
    x.ambient_rank = n;
    if (text.size() > 6 && text.substr(text.size() - 6) == "@plain") {
        if (amb != Family::D)
            throw std::invalid_argument("@plain applies to D ambients only");
        x.dn_class = DnClass::Plain;
        text = text.substr(0, text.size() - 6);
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw std::invalid_argument("empty factor token");
        bool gl_marked = false;
        if (tok.size() > 4 && tok.substr(tok.size() - 4) == "[gl]") {
            gl_marked = true;
            tok = tok.substr(0, tok.size() - 4);
        }
        const char fam = tok[0];
        int rank = 0;
        try {
            size_t used = 0;
            rank = std::stoi(tok.substr(1), &used);
            if (used + 1 != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad factor token: " + tok);
        }
        if (rank < 0) throw std::invalid_argument("bad factor rank: " + tok);
        if (fam == 'T') {
            if (gl_marked) throw std::invalid_argument("torus factors take no flavor");
            x.central_torus_rank += rank;
            continue;
        }
        const Family f = family_from_letter(fam);
        if (gl_marked && f != Family::A)
            throw std::invalid_argument("[gl] marks A factors only");
        Flavor flavor = Flavor::Orthogonal;
        if (f == Family::A) flavor = Flavor::LinearPair;
        if (f == Family::C) flavor = Flavor::Symplectic;
        x.factors.push_back({f, rank, flavor});
    }
    return normalize_spec(x);
}

inline std::string to_string(const ParabolicSpec& p) {
    std::string out = "P";
    for (size_t i = 0; i < p.crossed.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.crossed[i]);
    }
    return out;
}

inline ParabolicSpec parse_parabolic(const RootSystem& g, std::string text) {
    if (text.size() < 2 || text[0] != 'P')
        throw std::invalid_argument("parabolic must look like P1, P3,5, Pn- or Pn+");
    text = text.substr(1);
    ParabolicSpec p;
    if (text == "n+" || text == "n-") {
        if (g.family != Family::D)
            throw std::invalid_argument("Pn+/Pn- name the two D-ambient space classes");
        p.crossed.push_back(text == "n+" ? g.rank : g.rank - 1);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int node = 0;
            try {
                size_t used = 0;
                node = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("bad parabolic node: " + tok);
            }
            p.crossed.push_back(node);
        }
    }
    std::sort(p.crossed.begin(), p.crossed.end());
    p.crossed.erase(std::unique(p.crossed.begin(), p.crossed.end()), p.crossed.end());
    if (p.crossed.empty()) throw std::invalid_argument("parabolic crosses no node");
    for (int node : p.crossed)
        if (node < 1 || node > g.rank)
            throw std::invalid_argument("crossed node " + std::to_string(node) +
                                        " outside 1.." + std::to_string(g.rank));
    return p;
}

// ---------------------------------------------------------------------------
// Placement: the root subsystem of X and of Levi subgroups
// ---------------------------------------------------------------------------

// Coordinate layout: GL blocks first (rank k occupying k+1 coordinates, roots
// the differences within the block), then C/D factors (k coordinates each),
// then free torus coordinates, then the B factor on the trailing coordinates
// (it owns the short roots).  In a D ambient whose GL blocks cover all
// coordinates the FlipLast class negates the last coordinate of the final
// block.
inline Subsystem subsystem_of_X(const RootSystem& g, const SubgroupSpec& spec) {
    const SubgroupSpec x = normalize_spec(spec);
    if (x.ambient_family != g.family || x.ambient_rank != g.rank)
        throw std::invalid_argument("subgroup spec does not match the ambient");
    std::vector<Root> roots;
    int pos = 0;
    auto add_gl_block = [&](int rank, bool flip_last) {
        const int size = rank + 1;
        for (int u = pos; u < pos + size; ++u)
            for (int v = pos; v < pos + size; ++v) {
                if (u == v) continue;
                Root r(g.dim, 0);
                r[u] = 1;
                r[v] = -1;
                if (flip_last) {
                    const int last = pos + size - 1;
                    r[last] = -r[last];
                }
                if (support_size(r) > 0) roots.push_back(r);
            }
        pos += size;
    };
    auto add_pm_block = [&](int size, bool with_short, bool with_long2) {
        for (int u = pos; u < pos + size; ++u) {
            if (with_short) {
                Root r(g.dim, 0);
                r[u] = 1;
                roots.push_back(r);
                roots.push_back(negate(r));
            }
            if (with_long2) {
                Root r(g.dim, 0);
                r[u] = 2;
                roots.push_back(r);
                roots.push_back(negate(r));
            }
            for (int v = u + 1; v < pos + size; ++v)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Root r(g.dim, 0);
                        r[u] = si;
                        r[v] = sj;
                        roots.push_back(r);
                    }
        }
        pos += size;
    };

    detail::Shape s = detail::shape_of(x);
    const bool flip_active = x.ambient_family == Family::D && s.a() >= 1 && s.dd() == 0 &&
                             s.singles(Family::D) == 0;
    for (size_t i = 0; i < s.gl_ranks.size(); ++i) {
        const bool flip = flip_active && x.dn_class == DnClass::FlipLast &&
                          i + 1 == s.gl_ranks.size();
        add_gl_block(s.gl_ranks[i], flip);
    }
    if (x.ambient_family == Family::C)
        for (int r : s.c_ranks) add_pm_block(r, false, true);
    if (x.ambient_family == Family::B || x.ambient_family == Family::D)
        for (int r : s.d_ranks) add_pm_block(r, false, false);
    pos += s.singles(x.ambient_family);
    if (s.b_rank > 0) add_pm_block(s.b_rank, true, false);
    if (pos != g.dim) throw std::logic_error("placement did not cover the coordinates");
    for (const Root& r : roots)
        if (!g.contains(r)) throw std::logic_error("placement left the ambient root system");
    return make_subsystem(g, std::move(roots));
}

// Roots whose coefficients vanish at every crossed node.
inline Subsystem levi_subsystem_of(const RootSystem& g, const ParabolicSpec& p) {
    for (int node : p.crossed)
        if (node < 1 || node > g.rank)
            throw std::invalid_argument("crossed node outside the diagram");
    std::vector<Root> roots;
    for (const Root& r : g.roots) {
        IntVec c = simple_coeffs(g, r);
        bool keep = true;
        for (int node : p.crossed)
            if (c[node - 1] != 0) { keep = false; break; }
        if (keep) roots.push_back(r);
    }
    return make_subsystem(g, std::move(roots));
}

// ---------------------------------------------------------------------------
// Spherical table and finiteness rules
// ---------------------------------------------------------------------------

// Embedded spherical pairs; returns the row id when X is spherical in G.
inline std::optional<std::string> spherical_row(const SubgroupSpec& spec) {
    const SubgroupSpec x = normalize_spec(spec);
    if (is_full_group(x)) return "X=G";
    detail::Shape s = detail::shape_of(x);
    const int n = x.ambient_rank;
    const int sing = s.singles(x.ambient_family);
    switch (x.ambient_family) {
        case Family::A:
            if (s.blocks(Family::A) <= 2) return "spherical:A+A+T";
            return std::nullopt;
        case Family::B:
            if (s.a() == 0 && s.dd() + sing <= 1) return "spherical:B+D";
            if (s.a() == 1 && s.b() == 0 && s.dd() == 0 && sing == 0 && s.gl_ranks[0] == n - 1)
                return "spherical:GL";
            return std::nullopt;
        case Family::C:
            if (s.a() == 0 && s.torus == 0 && s.c() <= 2) return "spherical:C+C";
            if (s.a() == 0 && s.torus == 1 && s.c() <= 1) return "spherical:C+T";
            if (s.a() == 1 && sing == 0 && s.c() == 0 && s.gl_ranks[0] == n - 1)
                return "spherical:GL";
            return std::nullopt;
        case Family::D:
            if (s.a() == 0 && s.dd() + sing <= 2) return "spherical:D+D";
            if (s.a() == 1 && s.dd() == 0 && sing == 0 && s.gl_ranks[0] == n - 1)
                return "spherical:GL";
            return std::nullopt;
    }
    return std::nullopt;
}

namespace detail {

// The finite clauses at a maximal parabolic, one rule id per clause.
inline std::optional<std::string> finite_clause(const SubgroupSpec& x, int node) {
    const Shape s = shape_of(x);
    const int n = x.ambient_rank;
    const int sing = s.singles(x.ambient_family);
    switch (x.ambient_family) {
        case Family::A: {
            if (node == 1 || node == n) return "rule:i.a";
            if (s.blocks(Family::A) == 3) return "rule:i.b";
            return std::nullopt;
        }
        case Family::B: {
            if (node != 1 && node != n) return std::nullopt;
            if (s.a() == 1 && s.b() == 1 && s.dd() == 0 && sing == 0) return "rule:ii";
            return std::nullopt;
        }
        case Family::C: {
            if (node == 1) {
                // Products of symplectic factors with at most one torus line
                // (the GL factor, when present, carries it).
                if (s.torus <= 1) return "rule:iii.a";
                return std::nullopt;
            }
            if (node == n) {
                if (s.torus == 0 && s.c() <= 3) return "rule:iii.b";
                if (s.torus == 1 && s.a() + s.c() <= 2) return "rule:iii.b";
                return std::nullopt;
            }
            return std::nullopt;
        }
        case Family::D: {
            if (node == 1) {
                if (s.a() == 1 && s.dd() + sing == 1) return "rule:iv.b";
                if (s.a() == 2 && s.dd() == 0 && sing == 0) return "rule:iv.b";
                return std::nullopt;
            }
            if (node == n - 1 || node == n) {
                if (n == 4 && s.a() == 2 && s.dd() == 0 && sing == 0) {
                    // The two exceptional D_4 pairs; the FlipLast class is the
                    // subgroup whose last block pairs with the opposite space.
                    const bool flip = x.dn_class == DnClass::FlipLast;
                    if ((flip && node == 4) || (!flip && node == 3)) return "rule:iv.a";
                    return std::nullopt;
                }
                if (s.a() == 0 && s.dd() + sing == 3) return "rule:iv.c";
                if (s.a() == 1 && s.dd() + sing == 1) return "rule:iv.c";
                return std::nullopt;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Identify the embedded infinite-row id for provenance (best effort match;
// anything else is dominated by a listed row).
inline std::string infinite_row(const SubgroupSpec& x, const ParabolicSpec& p) {
    const Shape s = shape_of(x);
    const int n = x.ambient_rank;
    const int sing = s.singles(x.ambient_family);
    if (!p.maximal()) return "infinite:nonmaximal-P";
    const int node = p.node();
    switch (x.ambient_family) {
        case Family::A:
            if (s.blocks(Family::A) >= 4 && node >= 2 && node <= n - 1)
                return "infinite:A-AAAA.T";
            break;
        case Family::B:
            if (node == 1 || node == n) {
                if (s.a() == 0 && s.b() <= 1 && s.dd() + sing >= 2) return "infinite:B-B.D.D";
                if (s.a() == 2 && s.b() == 0 && s.dd() == 0) return "infinite:B-A.A.T2";
            }
            break;
        case Family::C:
            if (node == 1 || node == n) {
                if (s.torus >= 2) return "infinite:C-A.A.C.T2";
                if (node == n && s.torus == 0 && s.c() >= 4) return "infinite:C-C.C.C.C";
                if (node == n && s.torus == 1 && s.a() == 1 && s.c() >= 2)
                    return "infinite:C-A.C.C.T1";
            }
            break;
        case Family::D:
            if (node == 1 && s.a() == 0 && s.dd() + sing >= 3) return "infinite:D-D.D.D";
            if (node == n - 1 || node == n) {
                if (s.a() == 0 && s.dd() + sing >= 4) return "infinite:D-D.D.D.D";
                if (s.a() == 1 && s.dd() + sing >= 2) return "infinite:D-A.D.D";
                if (s.a() == 2 && s.dd() == 0 && sing == 0) return "infinite:D-A.A.T2";
            }
            break;
    }
    return "infinite:dominated";
}

}  // namespace detail

// The embedded classification: finite if and only if X is spherical or one of
// the finite clauses applies at a maximal parabolic.
inline Verdict classify_finiteness(const RootSystem& g, const SubgroupSpec& spec,
                                   const ParabolicSpec& p) {
    const SubgroupSpec x = normalize_spec(spec);
    if (x.ambient_family != g.family || x.ambient_rank != g.rank)
        throw std::invalid_argument("subgroup spec does not match the ambient");
    if (g.family == Family::D && g.rank < 3)
        throw std::invalid_argument("D ambients below rank 3 are not simple");
    for (int node : p.crossed)
        if (node < 1 || node > g.rank)
            throw std::invalid_argument("crossed node outside the diagram");
    if (p.crossed.empty()) throw std::invalid_argument("parabolic crosses no node");
    if (auto row = spherical_row(x)) return {Finiteness::Finite, *row};
    if (p.maximal())
        if (auto rule = detail::finite_clause(x, p.node()))
            return {Finiteness::Finite, *rule};
    return {Finiteness::Infinite, detail::infinite_row(x, p)};
}

// ---------------------------------------------------------------------------
// Conversion: closed subsystem -> SubgroupSpec
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> support_coords(const std::vector<Root>& roots) {
    std::set<int> s;
    for (const Root& r : roots)
        for (size_t k = 0; k < r.size(); ++k)
            if (r[k] != 0) s.insert(static_cast<int>(k));
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace detail

// Describe a closed subsystem as a SubgroupSpec.  The dn_class bit is fixed
// by comparing against the two placements when they differ.
inline SubgroupSpec spec_of_subsystem(const RootSystem& g, const Subsystem& s) {
    SubgroupSpec x;
    x.ambient_family = g.family;
    x.ambient_rank = g.rank;
    auto comps = components_of(s);

    // Merge pairs of long A_1 components sharing a two-coordinate support
    // into D_2 factors (B/D ambients).
    std::vector<char> merged(comps.size(), 0);
    if (g.family == Family::B || g.family == Family::D) {
        for (size_t i = 0; i < comps.size(); ++i) {
            if (merged[i] || comps[i].roots.size() != 2) continue;
            auto si = detail::support_coords(comps[i].roots);
            if (si.size() != 2) continue;
            if (dot(comps[i].roots[0], comps[i].roots[0]) != 2) continue;
            for (size_t j = i + 1; j < comps.size(); ++j) {
                if (merged[j] || comps[j].roots.size() != 2) continue;
                if (detail::support_coords(comps[j].roots) != si) continue;
                merged[i] = merged[j] = 1;
                x.factors.push_back({Family::D, 2, Flavor::Orthogonal});
                break;
            }
        }
    }

    for (size_t i = 0; i < comps.size(); ++i) {
        if (merged[i]) continue;
        const auto& c = comps[i];
        const int rank = static_cast<int>(c.base.size());
        const auto supp = detail::support_coords(c.roots);
        bool has_short = false, has_long2 = false;
        for (const Root& r : c.roots) {
            const long long n2 = dot(r, r);
            if (n2 == 1) has_short = true;
            if (n2 == 4) has_long2 = true;
        }
        if (g.family == Family::A) {
            x.factors.push_back({Family::A, rank, Flavor::LinearPair});
        } else if (has_long2) {
            x.factors.push_back({Family::C, rank, Flavor::Symplectic});
        } else if (has_short) {
            x.factors.push_back({Family::B, rank, Flavor::Orthogonal});
        } else if (static_cast<int>(supp.size()) == rank) {
            x.factors.push_back({Family::D, rank, Flavor::Orthogonal});
        } else {
            x.factors.push_back({Family::A, rank, Flavor::LinearPair});
        }
    }
    const int covered = static_cast<int>(detail::support_coords(s.roots).size());
    int glcount = 0;
    for (const auto& f : x.factors)
        if (f.family == Family::A) ++glcount;
    if (g.family == Family::A) {
        const int blocks = glcount + (g.dim - covered);
        x.central_torus_rank = blocks - 1;
    } else {
        x.central_torus_rank = glcount + (g.dim - covered);
    }
    x = normalize_spec(x);

    if (g.family == Family::D) {
        Subsystem flip = subsystem_of_X(g, x);
        if (!weyl_conjugate(s, flip)) {
            SubgroupSpec alt = x;
            alt.dn_class = DnClass::Plain;
            Subsystem plain = subsystem_of_X(g, alt);
            if (!weyl_conjugate(s, plain))
                throw std::logic_error("subsystem matches neither placement class");
            return alt;
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// Enumeration of maximal-rank subgroups (extended-diagram node deletion plus
// Levi descent, iterated per component, deduplicated up to Weyl conjugacy)
// ---------------------------------------------------------------------------

namespace detail {

// Highest root of an irreducible component: maximal total height over the
// component base.
inline Root component_highest(const Component& c) {
    Root best;
    long long best_h = -1;
    for (const Root& r : c.roots) {
        auto sol = solve_in_basis(c.base, r);
        if (!sol) continue;
        Rat h(0);
        for (const Rat& q : *sol) h += q;
        if (h.denominator() != 1) continue;
        const long long hh = h.numerator();
        if (hh > best_h) { best_h = hh; best = r; }
    }
    return best;
}

}  // namespace detail

inline std::vector<SubgroupSpec> enumerate_maximal_rank_subgroups(const RootSystem& g,
                                                                  int rank_bound = 8) {
    if (g.rank > rank_bound)
        throw std::invalid_argument("ambient rank exceeds the enumeration bound");
    std::vector<Subsystem> classes;  // conjugacy class representatives
    auto find_class = [&](const Subsystem& s) -> int {
        for (size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].size() != s.size()) continue;
            if (weyl_conjugate(classes[i], s)) return static_cast<int>(i);
        }
        return -1;
    };
    std::vector<Subsystem> work{full_subsystem(g)};
    classes.push_back(full_subsystem(g));
    classes.push_back(empty_subsystem(g));
    while (!work.empty()) {
        Subsystem s = std::move(work.back());
        work.pop_back();
        auto comps = components_of(s);
        std::vector<std::vector<Root>> bases;  // candidate generating sets
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            auto rest = [&](const std::vector<Root>& replacement) {
                std::vector<Root> b = replacement;
                for (size_t cj = 0; cj < comps.size(); ++cj)
                    if (cj != ci)
                        b.insert(b.end(), comps[cj].base.begin(), comps[cj].base.end());
                return b;
            };
            const auto& base = comps[ci].base;
            // Levi descent: drop one node of the component.
            for (size_t k = 0; k < base.size(); ++k) {
                std::vector<Root> nb;
                for (size_t m = 0; m < base.size(); ++m)
                    if (m != k) nb.push_back(base[m]);
                bases.push_back(rest(nb));
            }
            // Extended diagram: adjoin the lowest root, drop one node.
            if (base.size() >= 1) {
                const Root lowest = negate(detail::component_highest(comps[ci]));
                for (size_t k = 0; k < base.size(); ++k) {
                    std::vector<Root> nb{lowest};
                    for (size_t m = 0; m < base.size(); ++m)
                        if (m != k) nb.push_back(base[m]);
                    bases.push_back(rest(nb));
                }
            }
        }
        for (const auto& b : bases) {
            if (b.empty()) continue;
            Subsystem h = closed_hull(g, b);
            if (find_class(h) < 0) {
                classes.push_back(h);
                work.push_back(h);
            }
        }
    }
    std::vector<SubgroupSpec> specs;
    for (const auto& cls : classes) specs.push_back(spec_of_subsystem(g, cls));
    std::sort(specs.begin(), specs.end(), [](const SubgroupSpec& a, const SubgroupSpec& b) {
        return to_string(a) < to_string(b);
    });
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
    return specs;
}

}  // namespace dcoset
