#include "zagreb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "zagreb/bounds.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/example_graphs.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb {

const char* property_name(PropertyId id) {
    switch (id) {
        case PropertyId::P1_validity: return "P1_validity";
        case PropertyId::P2_equality_iff: return "P2_equality_iff";
        case PropertyId::P3_dominance: return "P3_dominance";
        case PropertyId::P4_identities: return "P4_identities";
        case PropertyId::P5_incomparability: return "P5_incomparability";
        case PropertyId::P6_amhm_chain: return "P6_amhm_chain";
        case PropertyId::P7_table1: return "P7_table1";
    }
    return "?";
}

PropertyId parse_property(const std::string& name) {
    for (PropertyId id : {PropertyId::P1_validity, PropertyId::P2_equality_iff,
                          PropertyId::P3_dominance, PropertyId::P4_identities,
                          PropertyId::P5_incomparability, PropertyId::P6_amhm_chain,
                          PropertyId::P7_table1}) {
        std::string full = property_name(id);
        if (name == full || name == full.substr(0, 2)) return id;
    }
    throw HypothesisError("unknown property: " + name);
}

bool VerificationReport::pass() const {
    if (!violations.empty()) return false;
    if (existential)
        return static_cast<long>(witnesses.size()) >= witnesses_required;
    return true;
}

void VerificationReport::sort_entries() {
    auto lt = [](const auto& a, const auto& b) {
        return std::tie(a.graph6, a.bound_id) < std::tie(b.graph6, b.bound_id);
    };
    std::stable_sort(violations.begin(), violations.end(), lt);
    std::stable_sort(findings.begin(), findings.end(), lt);
}

namespace {

// Bound checks depend only on the sorted degree sequence, so results are
// memoized per sequence while graph counts stay per graph.
struct SeqOutcome {
    long checks = 0;
    long skipped = 0;
    std::vector<Violation> violations;  // graph6 filled in per graph
    std::vector<Finding> findings;
};

std::string seq_key(const DegreeSequence& ds) {
    std::string k;
    for (int d : ds.values()) k.push_back(static_cast<char>('0' + d));
    return k;
}

template <typename PerSeq>
void run_degree_cached(const CorpusSpec& corpus, VerificationReport& rep,
                       PerSeq per_seq) {
    std::map<std::string, SeqOutcome> cache;
    for_each_graph(corpus, [&](const Graph& g) {
        ++rep.graphs_checked;
        DegreeSequence ds(g);
        auto [it, fresh] = cache.try_emplace(seq_key(ds));
        if (fresh) it->second = per_seq(ds);
        const SeqOutcome& out = it->second;
        rep.checks += out.checks;
        rep.skipped += out.skipped;
        std::string g6 = encode_graph6(g);
        for (Violation v : out.violations) {
            v.graph6 = g6;
            rep.violations.push_back(std::move(v));
        }
        for (Finding f : out.findings) {
            f.graph6 = g6;
            rep.findings.push_back(std::move(f));
        }
    });
}

std::string rs(const Rational& r) { return to_fraction_string(r); }

void all_specs(const DegreeSequence& ds, long alpha,
               const std::function<void(const BoundSpec&)>& fn) {
    int n = ds.n();
    std::vector<std::vector<int>> removals = {{}};
    if (n >= 4)
        for (int l = 1; l <= n; ++l) removals.push_back({l});
    if (n >= 5)
        for (int l = 1; l <= n; ++l)
            for (int m = l + 1; m <= n; ++m) removals.push_back({l, m});
    for (const auto& rem : removals) {
        for (int j = 1; j <= n; ++j) {
            if (std::find(rem.begin(), rem.end(), j) != rem.end()) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (std::find(rem.begin(), rem.end(), k) != rem.end()) continue;
                fn(BoundSpec{alpha, rem, j, k});
            }
        }
    }
}

std::string spec_label(const BoundSpec& s) {
    std::string out = "kernel" + std::to_string(s.removed.size()) +
                      "(alpha=" + std::to_string(s.alpha) + ";removed=";
    for (std::size_t i = 0; i < s.removed.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.removed[i]);
    out += ";pair=" + std::to_string(s.j) + "," + std::to_string(s.k) + ")";
    return out;
}

constexpr long kAlphas[] = {-2, -1, 1, 2};

}  // namespace

VerificationReport check_validity(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P1_validity);
    rep.corpus = corpus;

    run_degree_cached(corpus, rep, [](const DegreeSequence& ds) {
        SeqOutcome out;
        if (ds.n() < 3) {  // the mean-square kernel needs three terms
            ++out.skipped;
            return out;
        }
        // every admissible kernel instance (removed set, pair)
        for (long alpha : kAlphas) {
            if (alpha < 0 && ds.delta() == 0) {
                ++out.skipped;
                continue;
            }
            Rational truth = zagreb_exact(ds, 2 * alpha);
            all_specs(ds, alpha, [&](const BoundSpec& spec) {
                Rational val = zagreb_lower_bound(ds, spec);
                ++out.checks;
                if (val > truth) {
                    Rational check = oracle::theorem_bound(ds, alpha, spec.removed,
                                                           spec.j, spec.k);
                    out.violations.push_back(
                        {"", spec_label(spec), rs(val), rs(truth),
                         check == val ? "oracle agrees: claim falsified"
                                      : "oracle disagrees: kernel bug, oracle=" +
                                            rs(check)});
                }
            });
        }
        // named corollaries
        for (const std::string& id : corollary_ids()) {
            BoundSpec spec = named_spec(id, ds.n());
            if (!spec_admissible(ds, spec)) {
                ++out.skipped;
                continue;
            }
            Rational truth = zagreb_exact(ds, 2 * spec.alpha);
            Rational val = zagreb_lower_bound(ds, spec);
            ++out.checks;
            if (val > truth) {
                Rational check = oracle::corollary_bound(id, ds);
                out.violations.push_back(
                    {"", id, rs(val), rs(truth),
                     check == val ? "oracle agrees: claim falsified"
                                  : "oracle disagrees: kernel bug"});
            }
        }
        // literature baselines must themselves be valid on the corpus
        auto check_baseline = [&](const std::string& id, long alpha) {
            try {
                ExactVal val = baseline_bound(ds, id, alpha);
                Rational truth = zagreb_exact(ds, bounded_index_alpha(id, alpha));
                ++out.checks;
                if (!val.leq(truth))
                    out.violations.push_back(
                        {"", id, to_string(val), rs(truth), "baseline invalid"});
            } catch (const std::exception&) {
                ++out.skipped;
            }
        };
        for (const std::string& id : baseline_m1_ids()) check_baseline(id, 1);
        for (const std::string& id : baseline_mm1_ids()) check_baseline(id, 1);
        for (long alpha : kAlphas) check_baseline("base_randic_diff", alpha);
        return out;
    });
    rep.sort_entries();
    return rep;
}

VerificationReport check_equality_iff(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P2_equality_iff);
    rep.corpus = corpus;

    run_degree_cached(corpus, rep, [](const DegreeSequence& ds) {
        SeqOutcome out;
        for (const std::string& id : corollary_ids()) {
            BoundSpec spec = named_spec(id, ds.n());
            if (!spec_admissible(ds, spec)) {
                ++out.skipped;
                continue;
            }
            Rational val = zagreb_lower_bound(ds, spec);
            Rational truth = zagreb_exact(ds, 2 * spec.alpha);
            bool equality = val == truth;
            bool member = false;
            for (const GammaClass& c : stated_equality_classes(id, ds.n()))
                member = member || gamma_member(ds, c.i, c.j);
            ++out.checks;
            if (equality == member) continue;

            Rational check = oracle::corollary_bound(id, ds);
            std::string detail =
                std::string(equality ? "equality without stated membership"
                                     : "stated membership without equality") +
                "; bound=" + rs(val) + " index=" + rs(truth);
            if (check == val)
                out.findings.push_back({"", id,
                                        detail + "; transcription oracle confirms "
                                                 "the value: printed class list "
                                                 "falsified"});
            else
                out.violations.push_back({"", id, rs(val), rs(truth),
                                          "kernel and transcription oracle "
                                          "disagree: implementation bug"});
        }
        return out;
    });
    rep.sort_entries();
    return rep;
}

namespace {

struct DominancePair {
    std::string stronger;
    std::string weaker;
    long alpha = 1;  // only used by base_randic_diff
};

const std::vector<DominancePair>& dominance_pairs() {
    static const std::vector<DominancePair> pairs = {
        {"cor_zte2", "base_xu2"},   {"cor_zr31", "base_avg"},
        {"cor_zr32", "base_avg1"},  {"cor_xu4", "base_xu1"},
        {"cor_z24degree", "base_xu3"}, {"mm1_pair", "base_m26"},
        {"mm1_one", "base_m27"},    {"mm1_two", "base_m28"},
        {"mm1_two", "base_m29"},
    };
    return pairs;
}

}  // namespace

VerificationReport check_dominance(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P3_dominance);
    rep.corpus = corpus;

    // degree-only pairs, memoized per sequence
    run_degree_cached(corpus, rep, [](const DegreeSequence& ds) {
        SeqOutcome out;
        auto check = [&](const std::string& sid, const Rational& strong,
                         const std::string& wid, long alpha) {
            try {
                ExactVal weak = baseline_bound(ds, wid, alpha);
                ++out.checks;
                if (!weak.leq(strong))
                    out.violations.push_back({"", sid + ">=" + wid, rs(strong),
                                              to_string(weak), "dominance failed"});
            } catch (const std::exception&) {
                ++out.skipped;
            }
        };
        for (const DominancePair& p : dominance_pairs()) {
            BoundSpec spec = named_spec(p.stronger, ds.n());
            if (!spec_admissible(ds, spec)) {
                ++out.skipped;
                continue;
            }
            check(p.stronger, zagreb_lower_bound(ds, spec), p.weaker, 1);
        }
        // no-removal kernel with the extreme pair vs the difference baseline
        for (long alpha : kAlphas) {
            BoundSpec spec{alpha, {}, 1, ds.n()};
            if (!spec_admissible(ds, spec)) {
                ++out.skipped;
                continue;
            }
            check("kernel_pair", zagreb_lower_bound(ds, spec), "base_randic_diff", alpha);
        }
        return out;
    });

    // application substitutions are graph-dependent (complement, M_2, coindices)
    for_each_graph(corpus, [&](const Graph& g) {
        DegreeSequence ds(g);
        std::string g6 = encode_graph6(g);
        auto violation = [&](const std::string& id, const Rational& lhs,
                             const Rational& rhs, const std::string& ctx) {
            rep.violations.push_back({g6, id, rs(lhs), rs(rhs), ctx});
        };
        BoundSpec pair_spec = named_spec("cor_zte2", ds.n());
        if (!spec_admissible(ds, pair_spec) || ds.Delta() < 1) {
            ++rep.skipped;
            return;
        }
        Rational strong = zagreb_lower_bound(ds, pair_spec);
        Rational weak = baseline_bound(ds, "base_xu2").a;
        Rational m1 = zagreb_exact(ds, 2);
        Rational m2 = second_zagreb(g);

        // second-Zagreb substitution: validity and monotone dominance
        Rational m2_s = m2_lower_bound(g, strong);
        Rational m2_w = m2_lower_bound(g, weak);
        rep.checks += 2;
        if (m2_s > m2) violation("app_m2", m2_s, m2, "M_2 bound invalid");
        if (m2_s < m2_w) violation("app_m2", m2_s, m2_w, "substitution dominance");

        // complement-sum substitutions stay below the true sums
        NordhausGaddum ng_s = nordhaus_gaddum(g, strong);
        NordhausGaddum ng_w = nordhaus_gaddum(g, weak);
        rep.checks += 6;
        if (ng_s.m1_sum_lb > ng_s.m1_sum_direct)
            violation("app_ng_m1", ng_s.m1_sum_lb, ng_s.m1_sum_direct, "invalid");
        if (ng_s.m2_sum_lb > ng_s.m2_sum_direct)
            violation("app_ng_m2", ng_s.m2_sum_lb, ng_s.m2_sum_direct, "invalid");
        if (ng_s.f_sum_lb > ng_s.f_sum_direct)
            violation("app_ng_f", ng_s.f_sum_lb, ng_s.f_sum_direct, "invalid");
        if (ng_s.m1_sum_lb < ng_w.m1_sum_lb)
            violation("app_ng_m1", ng_s.m1_sum_lb, ng_w.m1_sum_lb, "dominance");
        if (ng_s.m2_sum_lb < ng_w.m2_sum_lb)
            violation("app_ng_m2", ng_s.m2_sum_lb, ng_w.m2_sum_lb, "dominance");
        if (ng_s.f_sum_lb < ng_w.f_sum_lb)
            violation("app_ng_f", ng_s.f_sum_lb, ng_w.f_sum_lb, "dominance");

        // coindex bounds and their substitution dominance
        CoindexBounds cb_s = coindex_bounds(g, pair_spec, strong);
        CoindexBounds cb_w = coindex_bounds(g, pair_spec, weak);
        Rational z3sum = zagreb_exact(g, 3) + zagreb_coindex_exact(g, 3);
        Rational m2sum = m2 + second_zagreb_coindex(g);
        Rational m1co = zagreb_coindex_exact(g, 2);
        const Rational& fsum = z3sum;  // F + Fbar is Z_3 + Zbar_3
        rep.checks += 7;
        if (cb_s.index_plus_coindex_lb > z3sum)
            violation("app_coindex_z3", cb_s.index_plus_coindex_lb, z3sum, "invalid");
        if (cb_s.m2_plus_coindex_ub < m2sum)
            violation("app_coindex_m2", cb_s.m2_plus_coindex_ub, m2sum, "invalid");
        if (cb_s.m1_coindex_ub < m1co)
            violation("app_coindex_m1", cb_s.m1_coindex_ub, m1co, "invalid");
        if (cb_s.f_plus_coindex_lb > fsum)
            violation("app_coindex_f", cb_s.f_plus_coindex_lb, fsum, "invalid");
        if (cb_s.m2_plus_coindex_ub > cb_w.m2_plus_coindex_ub)
            violation("app_coindex_m2", cb_s.m2_plus_coindex_ub,
                      cb_w.m2_plus_coindex_ub, "dominance");
        if (cb_s.m1_coindex_ub > cb_w.m1_coindex_ub)
            violation("app_coindex_m1", cb_s.m1_coindex_ub, cb_w.m1_coindex_ub,
                      "dominance");
        if (cb_s.f_plus_coindex_lb < cb_w.f_plus_coindex_lb)
            violation("app_coindex_f", cb_s.f_plus_coindex_lb,
                      cb_w.f_plus_coindex_lb, "dominance");

        // the modified-index coindex instance (2*alpha+1 = -1)
        if (ds.delta() > 0) {
            BoundSpec mspec = named_spec("mm1_pair", ds.n());
            Rational lb = (Rational(ds.n()) - 1) * zagreb_lower_bound(ds, mspec);
            Rational zm1sum = zagreb_exact(g, -1) + zagreb_coindex_exact(g, -1);
            ++rep.checks;
            if (lb > zm1sum)
                violation("app_coindex_zm1", lb, zm1sum, "invalid");
        }
    });
    rep.sort_entries();
    return rep;
}

VerificationReport check_identities(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P4_identities);
    rep.corpus = corpus;

    for_each_graph(corpus, [&](const Graph& g) {
        ++rep.graphs_checked;
        std::string g6 = encode_graph6(g);
        DegreeSequence ds(g);
        Rational n(g.order());
        auto expect_eq = [&](const std::string& id, const Rational& lhs,
                             const Rational& rhs) {
            ++rep.checks;
            if (lhs != rhs)
                rep.violations.push_back({g6, id, rs(lhs), rs(rhs), "identity"});
        };
        for (long alpha : {-1L, 0L, 1L, 2L, 3L}) {
            if (ds.delta() == 0 && alpha <= 1) {
                ++rep.skipped;
                continue;
            }
            expect_eq("eq1_alpha" + std::to_string(alpha),
                      zagreb_exact(g, alpha) + zagreb_coindex_exact(g, alpha),
                      (n - 1) * zagreb_exact(g, alpha - 1));
        }
        Rational m1 = zagreb_exact(g, 2), m(g.size());
        NordhausGaddum ng = nordhaus_gaddum(g, m1);
        expect_eq("ng_m1", ng.m1_sum_direct, ng.m1_sum_identity);
        expect_eq("ng_m2", ng.m2_sum_direct, ng.m2_sum_identity);
        expect_eq("ng_f", ng.f_sum_direct, ng.f_sum_identity);
        expect_eq("m2_coindex", second_zagreb_coindex(g) + second_zagreb(g),
                  2 * m * m - m1 / 2);
    });
    rep.sort_entries();
    return rep;
}

VerificationReport find_incomparability_witnesses(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P5_incomparability);
    rep.corpus = corpus;
    rep.existential = true;

    static const std::vector<std::string> trio = {"cor_zte2", "cor_z2te1",
                                                  "cor_z2te2"};
    std::vector<std::pair<std::string, std::string>> directions;
    for (const auto& a : trio)
        for (const auto& b : trio)
            if (a != b) directions.emplace_back(a, b);
    rep.witnesses_required = static_cast<long>(directions.size());
    std::map<std::pair<std::string, std::string>, WitnessEntry> found;

    auto inspect = [&](const Graph& g, const std::string& tag) {
        ++rep.graphs_checked;
        DegreeSequence ds(g);
        std::map<std::string, Rational> vals;
        for (const auto& id : trio) {
            BoundSpec spec = named_spec(id, ds.n());
            if (!spec_admissible(ds, spec)) return;
            vals[id] = zagreb_lower_bound(ds, spec);
        }
        ++rep.checks;
        for (const auto& dir : directions) {
            if (found.count(dir)) continue;
            if (vals[dir.first] > vals[dir.second])
                found[dir] = {encode_graph6(g),
                              tag + dir.first + ">" + dir.second + ": " +
                                  rs(vals[dir.first]) + " > " +
                                  rs(vals[dir.second])};
        }
    };

    inspect(examples::g1(), "G1: ");
    inspect(examples::g2(), "G2: ");
    inspect(examples::g3(), "G3: ");
    if (found.size() < directions.size())
        for_each_graph(corpus, [&](const Graph& g) { inspect(g, ""); });

    for (auto& [dir, w] : found) rep.witnesses.push_back(w);
    return rep;
}

VerificationReport check_amhm_chain(const CorpusSpec& corpus) {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P6_amhm_chain);
    rep.corpus = corpus;

    run_degree_cached(corpus, rep, [](const DegreeSequence& ds) {
        SeqOutcome out;
        if (ds.delta() == 0) {
            ++out.skipped;
            return out;
        }
        int n = ds.n();
        Rational two_m(ds.degree_sum());
        Rational idg = zagreb_exact(ds, -1);
        Rational D(ds.Delta()), d(ds.delta());
        Rational den1 = two_m - D;
        if (den1 > 0) {
            ++out.checks;
            Rational lhs = idg - 1 / D;
            Rational rhs = Rational((n - 1)) * (n - 1) / den1;
            if (lhs < rhs)
                out.violations.push_back({"", "amhm_one", rs(lhs), rs(rhs), ""});
        } else {
            ++out.skipped;
        }
        Rational den2 = two_m - D - d;
        if (n >= 3 && den2 > 0) {
            ++out.checks;
            Rational lhs = idg - 1 / D - 1 / d;
            Rational rhs = Rational((n - 2)) * (n - 2) / den2;
            if (lhs < rhs)
                out.violations.push_back({"", "amhm_two", rs(lhs), rs(rhs), ""});
        } else {
            ++out.skipped;
        }
        return out;
    });
    rep.sort_entries();
    return rep;
}

VerificationReport check_spectral(const CorpusSpec& corpus, double tol) {
    VerificationReport rep;
    rep.property = "spectral";
    rep.corpus = corpus;
    for_each_graph(corpus, [&](const Graph& g) {
        ++rep.graphs_checked;
        std::string g6 = encode_graph6(g);
        DegreeSequence ds(g);
        SpectralResult sr;
        try {
            sr = spectral_radius(g);
        } catch (const DomainError& e) {
            rep.violations.push_back({g6, "spectral", "-", "-", e.what()});
            return;
        }
        double lb = spectral_lower_bound(g.order(), zagreb_exact(ds, 2));
        rep.checks += 2;
        if (sr.lambda1 + tol < lb)
            rep.violations.push_back({g6, "app_spectral", format_double(sr.lambda1),
                                      format_double(lb), "lambda1 below bound"});
        if (sr.lambda1 + tol < ds.delta() ||
            sr.lambda1 - tol > ds.Delta())
            rep.violations.push_back({g6, "spectral_sanity",
                                      format_double(sr.lambda1), "-",
                                      "outside [delta, Delta]"});
    });
    rep.sort_entries();
    return rep;
}

// --- Table 1 reproduction ----------------------------------------------

namespace {

struct Table1Row {
    std::string name;
    Graph graph;
    int printed_Delta, printed_d2, printed_dn1, printed_delta;
    Rational printed_m1;
    // printed bound columns in table order: extreme pair, low pair, high pair
    Rational printed_extreme, printed_low, printed_high;
};

std::vector<Table1Row> table1_rows() {
    auto dec = [](long units, long frac4) {  // value printed as units.frac4
        return Rational(units * 10000 + frac4, 10000);
    };
    return {
        {"G1", examples::g1(), 7, 6, 4, 2, Rational(198),
         dec(193, 1667), dec(189, 1667), dec(190, 6667)},
        {"G2", examples::g2(), 6, 5, 3, 2, Rational(124),
         dec(120, 6667), dec(121, 1667), dec(117, 1667)},
        {"G3", examples::g3(), 5, 4, 3, 2, Rational(138),
         dec(133, 1667), dec(129, 1667), dec(134, 5000)},
    };
}

bool within_print_tol(const Rational& exact, const Rational& printed) {
    Rational diff = exact - printed;
    if (diff < 0) diff = -diff;
    return diff <= Rational(5, 100000);
}

}  // namespace

VerificationReport reproduce_table1() {
    VerificationReport rep;
    rep.property = property_name(PropertyId::P7_table1);
    rep.corpus = CorpusSpec{8, 8, true, false, true};

    for (const Table1Row& row : table1_rows()) {
        ++rep.graphs_checked;
        std::string g6 = encode_graph6(row.graph);
        DegreeSequence ds(row.graph);

        // degree header row
        auto check_deg = [&](const std::string& label, int printed, int actual) {
            ++rep.checks;
            if (printed != actual)
                rep.findings.push_back(
                    {g6, row.name + ":" + label,
                     "printed " + std::to_string(printed) + " but the figure's "
                     "edge list gives " + std::to_string(actual)});
        };
        check_deg("Delta", row.printed_Delta, ds.Delta());
        check_deg("d2", row.printed_d2, ds.d2());
        check_deg("d_n-1", row.printed_dn1, ds.d_nminus1());
        check_deg("delta", row.printed_delta, ds.delta());

        // M_1 must match exactly
        Rational m1 = zagreb_exact(ds, 2);
        ++rep.checks;
        if (m1 != row.printed_m1)
            rep.violations.push_back({g6, row.name + ":M1", rs(m1),
                                      rs(row.printed_m1), "M_1 mismatch"});

        Rational b_extreme = zagreb_lower_bound(ds, named_spec("cor_zte2", ds.n()));
        Rational b_low = zagreb_lower_bound(ds, named_spec("cor_z2te1", ds.n()));
        Rational b_high = zagreb_lower_bound(ds, named_spec("cor_z2te2", ds.n()));

        ++rep.checks;
        if (!within_print_tol(b_extreme, row.printed_extreme))
            rep.violations.push_back({g6, row.name + ":cor_zte2", rs(b_extreme),
                                      rs(row.printed_extreme), "pair-bound mismatch"});

        // The last two printed columns: accept a direct match, flag a
        // transposed match, and as a last resort test whether the printed cell
        // equals a column formula evaluated with the table's own degree row
        // (the edge count is not in the header, so it stays the true one).
        Rational two_m(2 * row.graph.size());
        int n = ds.n();
        auto pair_formula = [&](int a, int b) {
            Rational ra(a), rb(b);
            Rational diff = ra - rb, mean = (ra + rb) / 2;
            return two_m * two_m / n + diff * diff / 2 +
                   Rational(2 * n) / (n - 2) * (two_m / n - mean) *
                       (two_m / n - mean);
        };
        Rational printed_low_hdr = pair_formula(row.printed_dn1, row.printed_delta);
        Rational printed_high_hdr = pair_formula(row.printed_Delta, row.printed_d2);
        auto classify = [&](const std::string& label, const Rational& recomputed,
                            const Rational& printed, const Rational& other_recomputed,
                            const Rational& with_printed_degs,
                            const Rational& other_with_printed_degs) {
            ++rep.checks;
            if (within_print_tol(recomputed, printed)) return;
            if (within_print_tol(other_recomputed, printed)) {
                rep.findings.push_back(
                    {g6, row.name + ":" + label,
                     "printed " + rs(printed) + " matches the other degree-pair "
                     "column: last two bound columns transposed; recomputed " +
                     rs(recomputed)});
                return;
            }
            if (within_print_tol(with_printed_degs, printed)) {
                rep.findings.push_back(
                    {g6, row.name + ":" + label,
                     "printed " + rs(printed) + " reproducible only from the "
                     "printed degree row (see degree findings); recomputed " +
                     rs(recomputed)});
                return;
            }
            if (within_print_tol(other_with_printed_degs, printed)) {
                rep.findings.push_back(
                    {g6, row.name + ":" + label,
                     "printed " + rs(printed) + " is the other column's formula "
                     "evaluated with the printed degree row: columns transposed "
                     "and degree row inconsistent with the figure; recomputed " +
                     rs(recomputed)});
                return;
            }
            rep.violations.push_back({g6, row.name + ":" + label, rs(recomputed),
                                      rs(printed), "unexplained mismatch"});
        };
        classify("cor_z2te1", b_low, row.printed_low, b_high, printed_low_hdr,
                 printed_high_hdr);
        classify("cor_z2te2", b_high, row.printed_high, b_low, printed_high_hdr,
                 printed_low_hdr);
    }
    rep.sort_entries();
    return rep;
}

VerificationReport run_property(PropertyId id, const CorpusSpec& corpus) {
    switch (id) {
        case PropertyId::P1_validity: return check_validity(corpus);
        case PropertyId::P2_equality_iff: return check_equality_iff(corpus);
        case PropertyId::P3_dominance: return check_dominance(corpus);
        case PropertyId::P4_identities: return check_identities(corpus);
        case PropertyId::P5_incomparability:
            return find_incomparability_witnesses(corpus);
        case PropertyId::P6_amhm_chain: return check_amhm_chain(corpus);
        case PropertyId::P7_table1: return reproduce_table1();
    }
    throw HypothesisError("unknown property");
}

// --- serialization ------------------------------------------------------

namespace {

nlohmann::ordered_json corpus_json(const CorpusSpec& c) {
    return {{"n_min", c.n_min},
            {"n_max", c.n_max},
            {"connected_only", c.connected_only},
            {"dedup_isomorphic", c.dedup_isomorphic},
            {"min_degree_positive", c.min_degree_positive}};
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["property"] = r.property;
    j["corpus"] = corpus_json(r.corpus);
    j["graphs_checked"] = r.graphs_checked;
    j["checks"] = r.checks;
    j["skipped"] = r.skipped;
    j["status"] = r.pass() ? "pass" : "fail";
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : r.violations)
        j["violations"].push_back({{"graph6", v.graph6},
                                   {"bound", v.bound_id},
                                   {"lhs", v.lhs},
                                   {"rhs", v.rhs},
                                   {"context", v.context}});
    j["findings"] = nlohmann::ordered_json::array();
    for (const Finding& f : r.findings)
        j["findings"].push_back(
            {{"graph6", f.graph6}, {"bound", f.bound_id}, {"detail", f.detail}});
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const WitnessEntry& w : r.witnesses)
        j["witnesses"].push_back({{"graph6", w.graph6}, {"detail", w.detail}});
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.property << ": " << (r.pass() ? "PASS" : "FAIL")
        << "  graphs=" << r.graphs_checked << " checks=" << r.checks
        << " skipped=" << r.skipped << "\n";
    for (const Violation& v : r.violations)
        out << "  VIOLATION " << v.graph6 << "  " << v.bound_id << "  lhs=" << v.lhs
            << "  rhs=" << v.rhs << "  " << v.context << "\n";
    for (const Finding& f : r.findings)
        out << "  FINDING   " << f.graph6 << "  " << f.bound_id << "  " << f.detail
            << "\n";
    for (const WitnessEntry& w : r.witnesses)
        out << "  WITNESS   " << w.graph6 << "  " << w.detail << "\n";
    return out.str();
}

}  // namespace zagreb
