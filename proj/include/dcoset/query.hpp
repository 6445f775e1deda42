// query.hpp - text queries, combined classification reports, and table sweeps
// behind the command-line front end.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>

#include "criterion.hpp"
#include "flag_orbits.hpp"

namespace dcoset {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output formats
// ---------------------------------------------------------------------------

enum class OutputFormat : char { Text, Json, Csv };

inline std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

inline std::string to_string(Finiteness f) {
    return f == Finiteness::Finite ? "finite" : "infinite";
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

struct Query {
    Family family = Family::A;
    int rank = 1;
    SubgroupSpec subgroup;
    ParabolicSpec parabolic;
    std::optional<std::vector<int>> q_list;  // oracle primes, when requested
    SearchStrategy strategy = SearchStrategy::Construction;
    OutputFormat output = OutputFormat::Text;
};

// Parse failures carry the byte offset of the offending token.
struct QueryParseError : std::invalid_argument {
    size_t position;
    QueryParseError(const std::string& msg, size_t pos)
        : std::invalid_argument(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

struct QueryToken {
    std::string text;
    size_t pos = 0;
};

inline std::vector<QueryToken> query_tokens(const std::string& line) {
    std::vector<QueryToken> toks;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        toks.push_back({line.substr(i, j - i), i});
        i = j;
    }
    return toks;
}

inline std::vector<int> parse_prime_list(const std::string& text, size_t pos) {
    std::vector<int> qs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int q = 0;
        try {
            size_t used = 0;
            q = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw QueryParseError("bad prime '" + tok + "'", pos);
        }
        if (q != 2 && q != 3 && q != 5 && q != 7)
            throw QueryParseError("oracle primes are limited to 2,3,5,7", pos);
        qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.empty()) throw QueryParseError("empty prime list", pos);
    return qs;
}

}  // namespace detail

inline Query parse_query(const std::string& line) {
    const std::vector<detail::QueryToken> toks = detail::query_tokens(line);
    size_t i = 0;
    auto need = [&](const char* what) -> const detail::QueryToken& {
        if (i >= toks.size())
            throw QueryParseError(std::string("expected ") + what + " before end of input",
                                  line.size());
        return toks[i++];
    };
    const detail::QueryToken& verb = need("the verb 'classify'");
    if (verb.text != "classify")
        throw QueryParseError("queries start with 'classify', got '" + verb.text + "'", verb.pos);

    Query q;
    const detail::QueryToken& gtok = need("a group token like C4");
    try {
        if (gtok.text.size() < 2) throw std::invalid_argument("group token too short");
        q.family = family_from_letter(gtok.text[0]);
        size_t used = 0;
        q.rank = std::stoi(gtok.text.substr(1), &used);
        if (used + 1 != gtok.text.size() || q.rank < 1)
            throw std::invalid_argument("bad rank");
    } catch (const QueryParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw QueryParseError("bad group token '" + gtok.text + "': " + e.what(), gtok.pos);
    }
    RootSystem g;
    try {
        g = build_root_system(q.family, q.rank);
    } catch (const std::exception& e) {
        throw QueryParseError(e.what(), gtok.pos);
    }

    const detail::QueryToken& xtok = need("a factor list like C2*C2*T1");
    try {
        q.subgroup = parse_subgroup(q.family, q.rank, xtok.text);
    } catch (const std::exception& e) {
        throw QueryParseError("bad subgroup '" + xtok.text + "': " + e.what(), xtok.pos);
    }

    const detail::QueryToken& ptok = need("a parabolic like P1");
    try {
        q.parabolic = parse_parabolic(g, ptok.text);
    } catch (const std::exception& e) {
        throw QueryParseError("bad parabolic '" + ptok.text + "': " + e.what(), ptok.pos);
    }

    while (i < toks.size()) {
        const detail::QueryToken& flag = toks[i++];
        auto value = [&]() -> const detail::QueryToken& {
            if (i >= toks.size())
                throw QueryParseError("flag '" + flag.text + "' needs a value", flag.pos);
            return toks[i++];
        };
        if (flag.text == "--oracle") {
            const detail::QueryToken& v = value();
            q.q_list = detail::parse_prime_list(v.text, v.pos);
        } else if (flag.text == "--strategy") {
            const detail::QueryToken& v = value();
            try {
                q.strategy = parse_strategy(v.text);
            } catch (const std::exception& e) {
                throw QueryParseError(e.what(), v.pos);
            }
        } else if (flag.text == "--output") {
            const detail::QueryToken& v = value();
            try {
                q.output = parse_output_format(v.text);
            } catch (const std::exception& e) {
                throw QueryParseError(e.what(), v.pos);
            }
        } else {
            throw QueryParseError("unknown token '" + flag.text + "'", flag.pos);
        }
    }
    return q;
}

inline std::string format_query(const Query& q) {
    std::string out = "classify ";
    out += family_letter(q.family);
    out += std::to_string(q.rank);
    out += ' ' + to_string(q.subgroup) + ' ' + to_string(q.parabolic);
    if (q.q_list) {
        out += " --oracle ";
        for (size_t i = 0; i < q.q_list->size(); ++i)
            out += (i ? "," : "") + std::to_string((*q.q_list)[i]);
    }
    if (q.strategy != SearchStrategy::Construction) out += " --strategy " + to_string(q.strategy);
    if (q.output != OutputFormat::Text) out += " --output " + to_string(q.output);
    return out;
}

// ---------------------------------------------------------------------------
// The rule data behind every provenance id
// ---------------------------------------------------------------------------

struct RuleEntry {
    std::string kind;       // spherical | finite | infinite
    std::string id;         // the provenance string emitted with a verdict
    std::string ambient;    // ambient families the rule applies to
    std::string condition;  // shape and parabolic condition in words
};

inline const std::vector<RuleEntry>& rule_table() {
    static const std::vector<RuleEntry> table = {
        {"spherical", "X=G", "ABCD", "X is the whole group"},
        {"spherical", "spherical:A+A+T", "A", "at most two GL blocks counting free torus lines"},
        {"spherical", "spherical:B+D", "B",
         "no GL factor; at most one even block or free torus line beside the odd block"},
        {"spherical", "spherical:C+C", "C", "at most two symplectic blocks; no torus"},
        {"spherical", "spherical:C+T", "C", "at most one symplectic block plus one torus line"},
        {"spherical", "spherical:D+D", "D",
         "no GL factor; at most two even blocks counting free torus lines"},
        {"spherical", "spherical:GL", "BCD", "a single GL block covering every coordinate"},
        {"finite", "rule:i.a", "A", "any factors at an end-node parabolic"},
        {"finite", "rule:i.b", "A", "three GL blocks at any maximal parabolic"},
        {"finite", "rule:ii", "B", "one GL block and one odd block at P1 or Pn"},
        {"finite", "rule:iii.a", "C", "at most one torus line at P1"},
        {"finite", "rule:iii.b", "C",
         "at Pn: three symplectic blocks without torus; or two blocks with one torus line"},
        {"finite", "rule:iv.a", "D",
         "rank 4 only: two GL2 blocks at the end node matched to the placement class"},
        {"finite", "rule:iv.b", "D",
         "at P1: one GL block with exactly one even block or torus line; or two GL blocks "
         "covering everything"},
        {"finite", "rule:iv.c", "D",
         "at Pn-1 or Pn: three even blocks or torus lines; or one GL block with exactly one"},
        {"infinite", "infinite:A-AAAA.T", "A", "four or more GL blocks at an interior node"},
        {"infinite", "infinite:B-B.D.D", "B",
         "no GL factor; two or more even blocks or torus lines at P1 or Pn"},
        {"infinite", "infinite:B-A.A.T2", "B", "two GL blocks at P1 or Pn"},
        {"infinite", "infinite:C-A.A.C.T2", "C", "two or more torus lines at P1 or Pn"},
        {"infinite", "infinite:C-C.C.C.C", "C", "four symplectic blocks without torus at Pn"},
        {"infinite", "infinite:C-A.C.C.T1", "C",
         "one GL block and two or more symplectic blocks at Pn"},
        {"infinite", "infinite:D-D.D.D", "D",
         "no GL factor; three or more even blocks or torus lines at P1"},
        {"infinite", "infinite:D-D.D.D.D", "D",
         "no GL factor; four or more even blocks or torus lines at Pn-1 or Pn"},
        {"infinite", "infinite:D-A.D.D", "D",
         "one GL block with two or more even blocks or torus lines at Pn-1 or Pn"},
        {"infinite", "infinite:D-A.A.T2", "D",
         "two GL blocks at an end node not matched to the placement class"},
        {"infinite", "infinite:nonmaximal-P", "ABCD",
         "non-spherical X at a parabolic crossing more than one node"},
        {"infinite", "infinite:dominated", "ABCD",
         "dominated by a listed case with a larger subgroup or smaller parabolic"},
    };
    return table;
}

// Every provenance id emitted by the classifier resolves to exactly one entry.
inline const RuleEntry* find_rule(const std::string& id) {
    const RuleEntry* hit = nullptr;
    for (const RuleEntry& e : rule_table()) {
        if (e.id != id) continue;
        if (hit) return nullptr;
        hit = &e;
    }
    return hit;
}

// ---------------------------------------------------------------------------
// Combined classification
// ---------------------------------------------------------------------------

// Silence of the witness search is the expected reading of a finite verdict;
// any certified witness or prefilter hit contradicts it.
inline bool criterion_consistent(Finiteness f, CriterionOutcome o) {
    if (f == Finiteness::Finite) return o == CriterionOutcome::NoWitnessFound;
    return o != CriterionOutcome::NoWitnessFound;
}

// Orbit counts are evidence only; inconclusive and unsupported runs are
// consistent with either verdict.
inline bool oracle_consistent(Finiteness f, OracleVerdict v) {
    if (v == OracleVerdict::Bounded) return f == Finiteness::Finite;
    if (v == OracleVerdict::Growing) return f == Finiteness::Infinite;
    return true;
}

struct ClassifyReport {
    Query query;
    Verdict verdict;
    CriterionReport criterion;
    std::optional<StabilizationReport> oracle;
    bool agreement = true;
};

inline ClassifyReport run_classify(const Query& query, const OracleBudget& budget = {}) {
    ClassifyReport rep;
    rep.query = query;
    const RootSystem g = build_root_system(query.family, query.rank);
    rep.verdict = classify_finiteness(g, query.subgroup, query.parabolic);
    rep.criterion = search_infiniteness_witness(g, query.subgroup, query.parabolic,
                                                query.strategy);
    rep.agreement = criterion_consistent(rep.verdict.finiteness, rep.criterion.outcome);
    if (query.q_list) {
        rep.oracle = stabilization_test(query.family, query.rank, query.subgroup,
                                        query.parabolic, *query.q_list, budget);
        rep.agreement =
            rep.agreement && oracle_consistent(rep.verdict.finiteness, rep.oracle->verdict);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Sweep over every enumerated subgroup at every maximal parabolic
// ---------------------------------------------------------------------------

struct SweepRow {
    Family family = Family::A;
    int rank = 0;
    std::string group;
    std::string subgroup;
    std::string parabolic;
    Finiteness table_verdict = Finiteness::Finite;
    std::string provenance;
    CriterionOutcome criterion = CriterionOutcome::NoWitnessFound;
    std::optional<OracleVerdict> oracle;  // empty when the oracle was not run
    std::vector<long long> counts;        // orbit counts for the primes that ran
    bool agreement = true;
};

struct SweepReport {
    int rank_bound = 0;
    bool with_oracle = false;
    std::vector<SweepRow> rows;
    long long agreements = 0;
    long long disagreements = 0;
    bool ok() const { return disagreements == 0; }
};

inline SweepReport run_sweep(int rank_bound, bool with_oracle = false,
                             const OracleBudget& budget = {},
                             const std::vector<int>& q_list = {2, 3, 5},
                             SearchStrategy strategy = SearchStrategy::Construction) {
    if (rank_bound > 8) throw std::invalid_argument("sweep rank bound is 8");
    if (with_oracle && rank_bound > 4)
        throw std::invalid_argument("sweep rank bound with the oracle is 4");
    if (with_oracle && q_list.empty())
        throw std::invalid_argument("the oracle needs a prime list");
    SweepReport report;
    report.rank_bound = rank_bound;
    report.with_oracle = with_oracle;
    const std::pair<Family, int> starts[] = {
        {Family::A, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}};
    for (const auto& [fam, lo] : starts)
        for (int n = lo; n <= rank_bound; ++n) {
            const RootSystem g = build_root_system(fam, n);
            for (const SubgroupSpec& x : enumerate_maximal_rank_subgroups(g)) {
                for (int node = 1; node <= n; ++node) {
                    const ParabolicSpec p{{node}};
                    SweepRow row;
                    row.family = fam;
                    row.rank = n;
                    row.group = family_letter(fam) + std::to_string(n);
                    row.subgroup = to_string(x);
                    row.parabolic = to_string(p);
                    const Verdict v = classify_finiteness(g, x, p);
                    row.table_verdict = v.finiteness;
                    row.provenance = v.provenance;
                    row.criterion = search_infiniteness_witness(g, x, p, strategy).outcome;
                    row.agreement = criterion_consistent(v.finiteness, row.criterion);
                    if (with_oracle) {
                        const StabilizationReport st =
                            stabilization_test(fam, n, x, p, q_list, budget);
                        row.oracle = st.verdict;
                        row.counts = st.counts;
                        row.agreement =
                            row.agreement && oracle_consistent(v.finiteness, st.verdict);
                    }
                    report.rows.push_back(std::move(row));
                }
            }
        }
    std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.family, a.rank, a.subgroup, a.parabolic) <
               std::tie(b.family, b.rank, b.subgroup, b.parabolic);
    });
    for (const SweepRow& r : report.rows) ++(r.agreement ? report.agreements : report.disagreements);
    return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string rat_text(const Rat& v) {
    std::string out = std::to_string(v.numerator());
    if (v.denominator() != 1) out += '/' + std::to_string(v.denominator());
    return out;
}

inline std::string root_text(const Root& r) {
    std::string out = "(";
    for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    return out + ")";
}

inline std::string joined(const std::vector<long long>& xs, char sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline Json json_roots(const std::vector<Root>& roots) {
    Json arr = Json::array();
    for (const Root& r : roots) arr.push_back(r);
    return arr;
}

inline Json json_criterion(const CriterionReport& rep) {
    Json j;
    j["outcome"] = to_string(rep.outcome);
    j["candidates"] = rep.candidates;
    if (!rep.prefilter.empty()) j["prefilter"] = rep.prefilter;
    if (rep.witness) {
        const CriterionWitness& w = *rep.witness;
        j["witness"] = Json{{"pattern", w.pattern},
                            {"value", rat_text(w.value)},
                            {"origin", w.origin},
                            {"phi1_base", json_roots(w.phi1_base)},
                            {"phi2_base", json_roots(w.phi2_base)}};
    }
    if (rep.raw_positive) {
        j["raw_positive"] = true;
        j["max_raw_value"] = rat_text(rep.max_raw_value);
    }
    return j;
}

inline Json json_orbits(const OrbitReport& rep) {
    return Json{{"q", rep.q},
                {"points", rep.point_count},
                {"orbits", rep.orbit_count},
                {"sizes", rep.orbit_sizes}};
}

inline Json json_oracle(const StabilizationReport& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    j["within_band"] = rep.within_band;
    if (!rep.realization.empty()) j["realization"] = rep.realization;
    j["q_run"] = rep.q_run;
    j["counts"] = rep.counts;
    if (!rep.q_unsupported.empty()) j["q_unsupported"] = rep.q_unsupported;
    if (!rep.q_over_budget.empty()) j["q_over_budget"] = rep.q_over_budget;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    Json runs = Json::array();
    for (const OrbitReport& r : rep.reports) runs.push_back(json_orbits(r));
    j["runs"] = runs;
    return j;
}

namespace detail {

inline std::string criterion_text(const CriterionReport& rep, const std::string& indent) {
    std::string out = to_string(rep.outcome);
    if (rep.outcome == CriterionOutcome::PrefilteredInfinite) out += ": " + rep.prefilter;
    if (rep.witness) {
        const CriterionWitness& w = *rep.witness;
        out += ": " + w.pattern + " pair of value " + rat_text(w.value) + " (" + w.origin + ")";
        out += '\n' + indent + "phi1 base";
        for (const Root& r : w.phi1_base) out += ' ' + root_text(r);
        out += '\n' + indent + "phi2 base";
        for (const Root& r : w.phi2_base) out += ' ' + root_text(r);
    } else if (rep.candidates > 0) {
        out += " after " + std::to_string(rep.candidates) + " candidates";
    }
    if (rep.raw_positive)
        out += '\n' + indent + "raw counts reach " + rat_text(rep.max_raw_value) +
               " on uncertified shapes";
    return out;
}

inline std::string oracle_text(const StabilizationReport& rep) {
    std::string out = to_string(rep.verdict);
    if (!rep.counts.empty()) {
        out += " (counts " + joined(rep.counts, ',') + " at q=";
        for (size_t i = 0; i < rep.q_run.size(); ++i)
            out += (i ? "," : "") + std::to_string(rep.q_run[i]);
        if (!rep.realization.empty()) out += "; " + rep.realization;
        out += ")";
    }
    for (const std::string& note : rep.notes) out += "\n    " + note;
    return out;
}

}  // namespace detail

inline Json json_classify(const ClassifyReport& rep) {
    Json j;
    j["query"] = format_query(rep.query);
    j["group"] = family_letter(rep.query.family) + std::to_string(rep.query.rank);
    j["subgroup"] = to_string(rep.query.subgroup);
    j["parabolic"] = to_string(rep.query.parabolic);
    j["verdict"] = to_string(rep.verdict.finiteness);
    j["provenance"] = rep.verdict.provenance;
    j["criterion"] = json_criterion(rep.criterion);
    if (rep.oracle) j["oracle"] = json_oracle(*rep.oracle);
    j["agreement"] = rep.agreement;
    return j;
}

inline std::string classify_csv(const ClassifyReport& rep) {
    std::string out =
        "group,subgroup,parabolic,verdict,provenance,criterion,oracle_verdict,oracle_counts,"
        "agreement\n";
    out += family_letter(rep.query.family) + std::to_string(rep.query.rank);
    out += ',' + to_string(rep.query.subgroup) + ',' + to_string(rep.query.parabolic);
    out += ',' + to_string(rep.verdict.finiteness) + ',' + rep.verdict.provenance;
    out += ',' + to_string(rep.criterion.outcome);
    out += ',';
    if (rep.oracle) out += to_string(rep.oracle->verdict);
    out += ',';
    if (rep.oracle) out += joined(rep.oracle->counts, '|');
    out += rep.agreement ? ",yes\n" : ",no\n";
    return out;
}

inline std::string classify_text(const ClassifyReport& rep) {
    std::string out = "query:      " + format_query(rep.query) + '\n';
    out += "verdict:    " + to_string(rep.verdict.finiteness) + "  [" + rep.verdict.provenance +
           "]\n";
    out += "criterion:  " + detail::criterion_text(rep.criterion, "    ") + '\n';
    if (rep.oracle) out += "oracle:     " + detail::oracle_text(*rep.oracle) + '\n';
    out += std::string("agreement:  ") + (rep.agreement ? "yes" : "no") + '\n';
    return out;
}

inline std::string render_classify(const ClassifyReport& rep) {
    switch (rep.query.output) {
        case OutputFormat::Json: return json_classify(rep).dump(2) + '\n';
        case OutputFormat::Csv: return classify_csv(rep);
        case OutputFormat::Text: return classify_text(rep);
    }
    return "";
}

inline Json json_sweep_row(const SweepRow& r) {
    Json j{{"group", r.group},
           {"subgroup", r.subgroup},
           {"parabolic", r.parabolic},
           {"verdict", to_string(r.table_verdict)},
           {"provenance", r.provenance},
           {"criterion", to_string(r.criterion)}};
    if (r.oracle) {
        j["oracle"] = to_string(*r.oracle);
        j["counts"] = r.counts;
    }
    j["agreement"] = r.agreement;
    return j;
}

inline Json json_sweep(const SweepReport& rep) {
    Json j;
    j["rank_bound"] = rep.rank_bound;
    j["with_oracle"] = rep.with_oracle;
    Json rows = Json::array();
    for (const SweepRow& r : rep.rows) rows.push_back(json_sweep_row(r));
    j["rows"] = rows;
    j["agreements"] = rep.agreements;
    j["disagreements"] = rep.disagreements;
    return j;
}

inline std::string sweep_csv(const SweepReport& rep) {
    std::string out =
        "group,subgroup,parabolic,verdict,provenance,criterion,oracle_verdict,oracle_counts,"
        "agreement\n";
    for (const SweepRow& r : rep.rows) {
        out += r.group + ',' + r.subgroup + ',' + r.parabolic;
        out += ',' + to_string(r.table_verdict) + ',' + r.provenance;
        out += ',' + to_string(r.criterion) + ',';
        if (r.oracle) out += to_string(*r.oracle);
        out += ',' + joined(r.counts, '|');
        out += r.agreement ? ",yes\n" : ",no\n";
    }
    return out;
}

inline std::string sweep_text(const SweepReport& rep) {
    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"group", "subgroup", "P", "verdict", "criterion", "oracle", "agree"});
    for (const SweepRow& r : rep.rows) {
        std::string oracle = "-";
        if (r.oracle) {
            oracle = to_string(*r.oracle);
            if (!r.counts.empty()) oracle += " [" + joined(r.counts, ',') + "]";
        }
        cells.push_back({r.group, r.subgroup, r.parabolic,
                         to_string(r.table_verdict) + " " + r.provenance,
                         to_string(r.criterion), oracle, r.agreement ? "yes" : "NO"});
    }
    std::array<size_t, 7> width{};
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    out += "rows " + std::to_string(rep.rows.size()) + "  agreements " +
           std::to_string(rep.agreements) + "  disagreements " +
           std::to_string(rep.disagreements) + '\n';
    return out;
}

inline std::string render_sweep(const SweepReport& rep, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return json_sweep(rep).dump(2) + '\n';
        case OutputFormat::Csv: return sweep_csv(rep);
        case OutputFormat::Text: return sweep_text(rep);
    }
    return "";
}

inline std::string render_criterion(const CriterionReport& rep, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return json_criterion(rep).dump(2) + '\n';
        case OutputFormat::Csv: {
            std::string out = "outcome,pattern,value,origin,candidates\n";
            out += to_string(rep.outcome) + ',';
            if (rep.witness) out += rep.witness->pattern;
            out += ',';
            if (rep.witness) out += rat_text(rep.witness->value);
            out += ',';
            if (rep.witness) out += rep.witness->origin;
            out += ',' + std::to_string(rep.candidates) + '\n';
            return out;
        }
        case OutputFormat::Text: return detail::criterion_text(rep, "  ") + '\n';
    }
    return "";
}

inline std::string render_oracle(const StabilizationReport& rep, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return json_oracle(rep).dump(2) + '\n';
        case OutputFormat::Csv: {
            std::string out = "q,points,orbits,sizes\n";
            for (const OrbitReport& r : rep.reports) {
                out += std::to_string(r.q) + ',' + std::to_string(r.point_count) + ',' +
                       std::to_string(r.orbit_count) + ',' + joined(r.orbit_sizes, '|') + '\n';
            }
            return out;
        }
        case OutputFormat::Text: {
            std::string out = detail::oracle_text(rep) + '\n';
            for (const OrbitReport& r : rep.reports)
                out += "  q=" + std::to_string(r.q) + ": " + std::to_string(r.point_count) +
                       " points, " + std::to_string(r.orbit_count) + " orbits, sizes " +
                       joined(r.orbit_sizes, ',') + '\n';
            return out;
        }
    }
    return "";
}

inline std::string render_tables(OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const RuleEntry& e : rule_table())
                arr.push_back(Json{{"kind", e.kind},
                                   {"id", e.id},
                                   {"ambient", e.ambient},
                                   {"condition", e.condition}});
            return arr.dump(2) + '\n';
        }
        case OutputFormat::Csv: {
            std::string out = "kind,id,ambient,condition\n";
            for (const RuleEntry& e : rule_table())
                out += e.kind + ',' + e.id + ',' + e.ambient + ',' + e.condition + '\n';
            return out;
        }
        case OutputFormat::Text: {
            size_t idw = 0, ambw = 0;
            for (const RuleEntry& e : rule_table()) {
                idw = std::max(idw, e.id.size());
                ambw = std::max(ambw, e.ambient.size());
            }
            std::string out;
            std::string kind;
            for (const RuleEntry& e : rule_table()) {
                if (e.kind != kind) {
                    if (!out.empty()) out += '\n';
                    kind = e.kind;
                    out += kind + " rules\n";
                }
                out += "  " + e.id + std::string(idw - e.id.size() + 2, ' ') + e.ambient +
                       std::string(ambw - e.ambient.size() + 2, ' ') + e.condition + '\n';
            }
            return out;
        }
    }
    return "";
}

// Canonical basis matrices of a flag set, one CSV line per flag part; rows of
// a part are joined with '|'.
inline std::string flag_set_csv(const FlagSet& flags) {
    std::string out = "flag,part,rows,cols,matrix\n";
    for (size_t i = 0; i < flags.keys.size(); ++i) {
        const std::vector<FMat> parts =
            detail::split_flag_key(flags.keys[i], flags.dims, flags.ambient_dim);
        for (size_t p = 0; p < parts.size(); ++p) {
            const FMat& m = parts[p];
            out += std::to_string(i) + ',' + std::to_string(p) + ',' + std::to_string(m.rows) +
                   ',' + std::to_string(m.cols) + ',';
            for (int r = 0; r < m.rows; ++r) {
                if (r) out += '|';
                for (int c = 0; c < m.cols; ++c) out += static_cast<char>('0' + m.at(r, c));
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace dcoset
