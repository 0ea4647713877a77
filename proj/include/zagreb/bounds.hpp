#ifndef ZAGREB_BOUNDS_HPP
#define ZAGREB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

// One instance of the degree-pair lower-bound family. The bound is on
// Z_{2*alpha}(G): `removed` holds 0-2 sorted-degree positions whose powers
// are added back verbatim, the mean-square kernel runs on the rest, and
// (j, k) is the distinguished pair (sorted positions, not in `removed`).
struct BoundSpec {
    long alpha = 1;
    std::vector<int> removed;
    int j = 0;
    int k = 0;
};

// RHS of the mean-square kernel inequality for xs (1-based positions j != k):
//   sum x_i^2 >= S^2/N + (x_j - x_k)^2 / 2 + (2N/(N-2)) (S/N - (x_j+x_k)/2)^2
// with equality iff all x_i outside {j, k} are equal. Needs N >= 3.
Rational kernel_rhs(const std::vector<Rational>& xs, int j, int k);
double kernel_rhs(const std::vector<double>& xs, int j, int k);

// Equality condition of the kernel: every element of xs outside {j, k} equal.
bool kernel_equality_condition(const std::vector<Rational>& xs, int j, int k);

void validate_spec(const DegreeSequence& ds, const BoundSpec& spec);
bool spec_admissible(const DegreeSequence& ds, const BoundSpec& spec);

// Lower bound on Z_{2*alpha}(G). Exact; alpha < 0 requires delta > 0.
Rational zagreb_lower_bound(const DegreeSequence& ds, const BoundSpec& spec);

// Same shape for non-integer alpha.
double zagreb_lower_bound_real(const DegreeSequence& ds, double alpha,
                               const std::vector<int>& removed, int j, int k);

// True iff the kernel step is tight on this graph (exact arithmetic).
bool bound_is_tight(const DegreeSequence& ds, const BoundSpec& spec);

// --- catalog ----------------------------------------------------------

// Named corollary instances ("cor_zte2", ..., "mm1_two"): positions of the
// removal set and pair on a sorted sequence of length n.
BoundSpec named_spec(const std::string& id, int n);

// The equality-characterization classes a corollary states, as printed.
std::vector<GammaClass> stated_equality_classes(const std::string& id, int n);

const std::vector<std::string>& corollary_ids();
const std::vector<std::string>& baseline_m1_ids();   // bound M_1
const std::vector<std::string>& baseline_mm1_ids();  // bound mM_1

// Literature baselines. Ids: base_xu2, base_xu1, base_avg, base_avg1,
// base_xu3 (on M_1); base_randic_diff (on Z_{2*alpha}); base_m26..base_m29
// (on mM_1, delta > 0). Throws HypothesisError when a precondition fails
// (e.g. nonpositive denominator) so callers can skip-with-reason.
ExactVal baseline_bound(const DegreeSequence& ds, const std::string& id,
                        long alpha = 1);

// Which index a catalog id bounds, as (coefficient alpha of Z): Z_2 for the
// M_1 family, Z_{-2} for the mM_1 family, 2*alpha for parametrized ids.
long bounded_index_alpha(const std::string& id, long alpha = 1);

// --- applications -------------------------------------------------------

// M_2(G) >= 2m^2 - (n-1) m Delta + (Delta - 1)/2 * m1_lb, monotone in m1_lb.
Rational m2_lower_bound(const Graph& g, const Rational& m1_lb);

double spectral_lower_bound(int n, const Rational& m1_lb);

struct NordhausGaddum {
    Rational m1_sum_direct, m1_sum_identity, m1_sum_lb;
    Rational m2_sum_direct, m2_sum_identity, m2_sum_lb;
    Rational f_sum_direct, f_sum_identity, f_sum_lb;
};

NordhausGaddum nordhaus_gaddum(const Graph& g, const Rational& m1_lb);

struct CoindexBounds {
    // lower bound on Z_{2a+1} + Zbar_{2a+1}: (n-1) times the Z_{2a} bound
    Rational index_plus_coindex_lb;
    Rational m2_plus_coindex_ub;  // 2m^2 - m1_lb/2
    Rational m1_coindex_ub;       // 2m(n-1) - m1_lb
    Rational f_plus_coindex_lb;   // (n-1) m1_lb
};

CoindexBounds coindex_bounds(const Graph& g, const BoundSpec& spec,
                             const Rational& m1_lb);

}  // namespace zagreb

#endif
