// Acceptance gate: one pass/fail line per criterion. Exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/example_graphs.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/verify.hpp"

using namespace zagreb;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// tolerance for values the source prints to four decimals
const Rational kPrintTol(5, 100000);

bool close(const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (d < 0) d = -d;
    return d <= kPrintTol;
}

void criterion_table1() {
    auto t0 = std::chrono::steady_clock::now();
    DegreeSequence g1(examples::g1()), g2(examples::g2()), g3(examples::g3());
    bool ok = true;
    std::string detail;

    ok = ok && zagreb_exact(g1, 2) == 198 && zagreb_exact(g2, 2) == 124 &&
         zagreb_exact(g3, 2) == 138;

    auto val = [](const DegreeSequence& ds, const char* id) {
        return zagreb_lower_bound(ds, named_spec(id, ds.n()));
    };
    // the pair-bound column matches print to four decimals on all three graphs
    ok = ok && close(val(g1, "cor_zte2"), Rational(1931667, 10000)) &&
         close(val(g2, "cor_zte2"), Rational(1206667, 10000)) &&
         close(val(g3, "cor_zte2"), Rational(1331667, 10000));

    // recomputed values of the two remaining columns, frozen exactly; the
    // printed table presents them transposed, and one printed cell follows
    // the table's own (incorrect) second-largest degree rather than the figure
    ok = ok && val(g1, "cor_z2te1") == Rational(572, 3) &&
         val(g1, "cor_z2te2") == Rational(1135, 6) &&
         val(g2, "cor_z2te1") == Rational(703, 6) &&
         val(g2, "cor_z2te2") == Rational(727, 6) &&
         val(g3, "cor_z2te1") == Rational(269, 2) &&
         val(g3, "cor_z2te2") == Rational(392, 3);
    ok = ok && close(val(g1, "cor_z2te1"), Rational(1906667, 10000)) &&
         close(val(g1, "cor_z2te2"), Rational(1891667, 10000)) &&
         close(val(g2, "cor_z2te1"), Rational(1171667, 10000)) &&
         close(val(g2, "cor_z2te2"), Rational(1211667, 10000)) &&
         close(val(g3, "cor_z2te1"), Rational(1345000, 10000));

    VerificationReport rep = reproduce_table1();
    int transposed = 0, printed_row = 0;
    for (const Finding& f : rep.findings) {
        if (f.detail.find("transposed") != std::string::npos) ++transposed;
        if (f.detail.find("printed degree row") != std::string::npos) ++printed_row;
    }
    ok = ok && rep.pass() && transposed >= 5 && printed_row >= 1;
    if (!rep.pass()) detail = "unexplained table mismatch";
    // the 129.1667 cell: the printed degree row must explain it exactly
    // (recomputation from the figure gives 392/3, flagged above)
    if (printed_row < 1) detail = "printed-degree-row cell not reproduced";

    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", dt);
    report("table1_golden", ok, detail.empty() ? buf : detail);
}

void criterion_kernel_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    long checks = 0, bad = 0;
    // every multiset of size 3..6 with entries in {1..4}
    for (int size = 3; size <= 6; ++size) {
        std::vector<int> ms(size, 1);
        while (true) {
            std::vector<Rational> xs(ms.begin(), ms.end());
            Rational sum_sq(0);
            for (const Rational& x : xs) sum_sq += x * x;
            for (int j = 1; j <= size; ++j)
                for (int k = j + 1; k <= size; ++k) {
                    Rational rhs = kernel_rhs(xs, j, k);
                    bool equality = sum_sq == rhs;
                    ++checks;
                    if (sum_sq < rhs) ++bad;
                    if (equality != kernel_equality_condition(xs, j, k)) ++bad;
                }
            // next nondecreasing tuple
            int i = size - 1;
            while (i >= 0 && ms[i] == 4) --i;
            if (i < 0) break;
            ++ms[i];
            for (int p = i + 1; p < size; ++p) ms[p] = ms[i];
        }
    }
    double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld checks, %.2fs", checks, dt);
    report("kernel_oracle_equivalence", bad == 0 && dt < 30.0, buf);
}

void run_split_corpus(const std::string& name,
                      VerificationReport (*fn)(const CorpusSpec&)) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport small = fn({3, 6, true, false, true});
    VerificationReport seven = fn({7, 7, true, true, true});
    bool ok = small.pass() && seven.pass();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%ld+%ld graphs, %ld violations, %ld findings, %.1fs",
                  small.graphs_checked, seven.graphs_checked,
                  static_cast<long>(small.violations.size() + seven.violations.size()),
                  static_cast<long>(small.findings.size() + seven.findings.size()),
                  seconds_since(t0));
    report(name, ok, buf);
}

void criterion_p2() {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = check_equality_iff({3, 7, true, true, true});
    // documented findings are acceptable; violations are not
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld graphs, %zu findings, %.1fs",
                  r.graphs_checked, r.findings.size(), seconds_since(t0));
    report("p2_equality_iff", r.pass(), buf);
}

void criterion_p4() {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = check_identities({3, 6, true, false, true});
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld graphs, %.1fs", r.graphs_checked,
                  seconds_since(t0));
    report("p4_identities", r.pass(), buf);
}

void criterion_p5() {
    VerificationReport r = find_incomparability_witnesses({3, 7, true, true, true});
    int from_examples = 0;
    for (const WitnessEntry& w : r.witnesses)
        if (w.detail.rfind("G1: ", 0) == 0 || w.detail.rfind("G2: ", 0) == 0 ||
            w.detail.rfind("G3: ", 0) == 0)
            ++from_examples;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu/6 witnesses, %d from the benchmark trio",
                  r.witnesses.size(), from_examples);
    report("p5_incomparability", r.pass() && from_examples >= 1, buf);
}

void criterion_spectral() {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport small = check_spectral({3, 6, true, false, true});
    VerificationReport seven = check_spectral({7, 7, true, true, true});
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld graphs, %.1fs",
                  small.graphs_checked + seven.graphs_checked, seconds_since(t0));
    report("spectral_bound", small.pass() && seven.pass(), buf);
}

}  // namespace

int main() {
    criterion_table1();
    criterion_kernel_oracle();
    run_split_corpus("p1_validity", &check_validity);
    criterion_p2();
    run_split_corpus("p3_dominance", &check_dominance);
    criterion_p4();
    criterion_p5();
    criterion_spectral();
    run_split_corpus("p6_amhm_chain", &check_amhm_chain);
    return failures == 0 ? 0 : 1;
}
