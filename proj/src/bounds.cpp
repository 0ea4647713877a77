#include "zagreb/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

template <typename S>
S kernel_rhs_impl(const std::vector<S>& xs, int j, int k) {
    int n = static_cast<int>(xs.size());
    if (n < 3) throw HypothesisError("kernel needs at least 3 values");
    if (j == k) throw HypothesisError("kernel pair must be distinct");
    if (j < 1 || k < 1 || j > n || k > n)
        throw HypothesisError("kernel pair position out of range");
    S sum(0);
    for (const S& x : xs) sum += x;
    const S& xj = xs[j - 1];
    const S& xk = xs[k - 1];
    S mean = sum / n;
    S half_pair = (xj + xk) / 2;
    S diff = xj - xk;
    S dev = mean - half_pair;
    return sum * mean + diff * diff / 2 + S(2 * n) / (n - 2) * dev * dev;
}

}  // namespace

Rational kernel_rhs(const std::vector<Rational>& xs, int j, int k) {
    return kernel_rhs_impl(xs, j, k);
}

double kernel_rhs(const std::vector<double>& xs, int j, int k) {
    return kernel_rhs_impl(xs, j, k);
}

bool kernel_equality_condition(const std::vector<Rational>& xs, int j, int k) {
    const Rational* first = nullptr;
    for (int i = 1; i <= static_cast<int>(xs.size()); ++i) {
        if (i == j || i == k) continue;
        if (!first)
            first = &xs[i - 1];
        else if (xs[i - 1] != *first)
            return false;
    }
    return true;
}

void validate_spec(const DegreeSequence& ds, const BoundSpec& spec) {
    int n = ds.n();
    if (spec.removed.size() > 2) throw HypothesisError("at most two removed positions");
    if (n - static_cast<int>(spec.removed.size()) < 3)
        throw HypothesisError("kernel needs at least 3 remaining degrees");
    std::vector<int> all = spec.removed;
    all.push_back(spec.j);
    all.push_back(spec.k);
    for (int p : all)
        if (p < 1 || p > n) throw HypothesisError("position out of range");
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw HypothesisError("removed and pair positions must be distinct");
    if (spec.alpha < 0 && ds.delta() == 0)
        throw DomainError("delta = 0: negative exponent undefined");
}

bool spec_admissible(const DegreeSequence& ds, const BoundSpec& spec) {
    try {
        validate_spec(ds, spec);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

namespace {

// Powers of the retained degrees in position order, plus the pair's
// positions within that reduced list.
std::vector<Rational> kernel_values(const DegreeSequence& ds, const BoundSpec& spec,
                                    int& j_out, int& k_out) {
    std::vector<Rational> xs;
    xs.reserve(ds.n());
    j_out = k_out = 0;
    for (int p = 1; p <= ds.n(); ++p) {
        if (std::find(spec.removed.begin(), spec.removed.end(), p) != spec.removed.end())
            continue;
        xs.push_back(ipow(Rational(ds.at(p)), spec.alpha));
        if (p == spec.j) j_out = static_cast<int>(xs.size());
        if (p == spec.k) k_out = static_cast<int>(xs.size());
    }
    return xs;
}

}  // namespace

Rational zagreb_lower_bound(const DegreeSequence& ds, const BoundSpec& spec) {
    validate_spec(ds, spec);
    int j = 0, k = 0;
    std::vector<Rational> xs = kernel_values(ds, spec, j, k);
    Rational total = kernel_rhs(xs, j, k);
    for (int p : spec.removed) total += ipow(Rational(ds.at(p)), 2 * spec.alpha);
    return total;
}

double zagreb_lower_bound_real(const DegreeSequence& ds, double alpha,
                               const std::vector<int>& removed, int j, int k) {
    BoundSpec probe{alpha < 0 ? -1 : 1, removed, j, k};
    validate_spec(ds, probe);
    std::vector<double> xs;
    int jj = 0, kk = 0;
    for (int p = 1; p <= ds.n(); ++p) {
        if (std::find(removed.begin(), removed.end(), p) != removed.end()) continue;
        xs.push_back(std::pow(static_cast<double>(ds.at(p)), alpha));
        if (p == j) jj = static_cast<int>(xs.size());
        if (p == k) kk = static_cast<int>(xs.size());
    }
    double total = kernel_rhs(xs, jj, kk);
    for (int p : removed)
        total += std::pow(static_cast<double>(ds.at(p)), 2 * alpha);
    return total;
}

bool bound_is_tight(const DegreeSequence& ds, const BoundSpec& spec) {
    return zagreb_lower_bound(ds, spec) == zagreb_exact(ds, 2 * spec.alpha);
}

BoundSpec named_spec(const std::string& id, int n) {
    if (id == "cor_zte2") return {1, {}, 1, n};
    if (id == "cor_z2te1") return {1, {}, n - 1, n};
    if (id == "cor_z2te2") return {1, {}, 1, 2};
    if (id == "cor_zr31") return {1, {1}, 2, n};
    if (id == "cor_zr32") return {1, {n}, 1, n - 1};
    if (id == "cor_xu4") return {1, {1, 2}, n - 1, n};
    if (id == "cor_z24degree") return {1, {1, n}, 2, n - 1};
    if (id == "mm1_pair") return {-1, {}, 1, n};
    if (id == "mm1_one") return {-1, {1}, 2, n};
    if (id == "mm1_two") return {-1, {1, n}, 2, n - 1};
    throw HypothesisError("unknown bound id: " + id);
}

std::vector<GammaClass> stated_equality_classes(const std::string& id, int n) {
    // As printed in the source corollaries; the verify module tests these
    // lists against exhaustive equality checks rather than trusting them.
    if (id == "cor_zte2" || id == "mm1_pair")
        return {{1, n}, {2, n - 1}, {1, n - 1}, {2, n}};
    if (id == "cor_z2te1") return {{1, n}, {1, n - 1}, {1, n - 2}};
    if (id == "cor_z2te2") return {{1, n}, {3, n}, {2, n}};
    if (id == "cor_zr31")
        return {{1, n}, {3, n - 1}, {3, n}, {2, n - 1}, {2, n}, {1, n - 1}};
    if (id == "cor_zr32" || id == "mm1_one")
        return {{1, n}, {2, n - 2}, {2, n - 1}, {2, n}, {1, n - 2}, {1, n - 1}};
    if (id == "cor_xu4" || id == "cor_z24degree" || id == "mm1_two")
        return {{1, n},     {3, n - 2}, {2, n - 2}, {3, n - 1}, {2, n - 1},
                {3, n},     {2, n},     {1, n - 2}, {1, n - 1}};
    throw HypothesisError("no stated equality classes for: " + id);
}

const std::vector<std::string>& corollary_ids() {
    static const std::vector<std::string> ids = {
        "cor_zte2", "cor_z2te1", "cor_z2te2", "cor_zr31",  "cor_zr32",
        "cor_xu4",  "cor_z24degree", "mm1_pair", "mm1_one", "mm1_two"};
    return ids;
}

const std::vector<std::string>& baseline_m1_ids() {
    static const std::vector<std::string> ids = {"base_xu2", "base_xu1", "base_avg",
                                                 "base_avg1", "base_xu3"};
    return ids;
}

const std::vector<std::string>& baseline_mm1_ids() {
    static const std::vector<std::string> ids = {"base_m26", "base_m27", "base_m28",
                                                 "base_m29"};
    return ids;
}

ExactVal baseline_bound(const DegreeSequence& ds, const std::string& id, long alpha) {
    int n = ds.n();
    if (n < 3) throw HypothesisError("baselines need n >= 3");
    Rational two_m(ds.degree_sum());
    Rational Delta(ds.Delta()), delta(ds.delta());
    Rational d2(n >= 2 ? ds.d2() : ds.Delta());
    Rational dn1(ds.d_nminus1());

    auto sq = [](const Rational& x) { return x * x; };

    if (id == "base_xu2")
        return {sq(two_m) / n + sq(Delta - delta) / 2};
    if (id == "base_xu1")
        return {sq(Delta) + sq(d2) + sq(two_m - Delta - d2) / (n - 2)};
    if (id == "base_avg")
        return {sq(Delta) + sq(two_m - Delta) / (n - 1) + sq(d2 - delta) / 2};
    if (id == "base_avg1")
        return {sq(delta) + sq(two_m - delta) / (n - 1) + sq(Delta - dn1) / 2};
    if (id == "base_xu3")
        return {sq(Delta) + sq(delta) + sq(two_m - Delta - delta) / (n - 2) +
                sq(d2 - dn1) / 2};
    if (id == "base_randic_diff") {
        Rational za = zagreb_exact(ds, alpha);
        Rational da = ipow(Delta, alpha), db = ipow(delta, alpha);
        return {sq(za) / n + sq(da - db) / 2};
    }

    if (ds.delta() == 0)
        throw DomainError("delta = 0: modified-Zagreb baselines undefined");
    Rational inv_D = 1 / Delta, inv_d = 1 / delta;
    if (id == "base_m26") {
        Rational idg = zagreb_exact(ds, -1);
        return {sq(idg) / n + sq(inv_d - inv_D) / 2};
    }
    if (id == "base_m27") {
        Rational den = two_m - Delta;
        if (den <= 0) throw HypothesisError("2m - Delta must be positive");
        return {sq(inv_D) + ipow(Rational(n - 1), 3) / sq(den)};
    }
    if (id == "base_m28") {
        Rational den = two_m - Delta - delta;
        if (den <= 0) throw HypothesisError("2m - Delta - delta must be positive");
        Rational mid = zagreb_exact(ds, -1) - inv_D - inv_d;
        return {sq(inv_D) + sq(inv_d), ipow(mid, 3) / den};
    }
    if (id == "base_m29") {
        Rational den = two_m - Delta - delta;
        if (den <= 0) throw HypothesisError("2m - Delta - delta must be positive");
        return {sq(inv_D) + sq(inv_d) + ipow(Rational(n - 2), 3) / sq(den)};
    }
    throw HypothesisError("unknown baseline id: " + id);
}

long bounded_index_alpha(const std::string& id, long alpha) {
    if (id.rfind("mm1_", 0) == 0 || id.rfind("base_m2", 0) == 0) return -2;
    if (id == "base_randic_diff") return 2 * alpha;
    if (id.rfind("cor_", 0) == 0 || id.rfind("base_", 0) == 0) return 2;
    if (id.rfind("kernel", 0) == 0) return 2 * alpha;
    throw HypothesisError("unknown bound id: " + id);
}

Rational m2_lower_bound(const Graph& g, const Rational& m1_lb) {
    if (DegreeSequence(g).Delta() < 1)
        throw HypothesisError("M_2 bound needs Delta >= 1");
    Rational n(g.order()), m(g.size());
    Rational Delta(DegreeSequence(g).Delta());
    return 2 * m * m - (n - 1) * m * Delta + (Delta - 1) / 2 * m1_lb;
}

double spectral_lower_bound(int n, const Rational& m1_lb) {
    return std::sqrt(to_double(m1_lb) / n);
}

NordhausGaddum nordhaus_gaddum(const Graph& g, const Rational& m1_lb) {
    Graph gc = g.complement();
    Rational n(g.order()), m(g.size());
    Rational m1 = zagreb_exact(g, 2);
    Rational nm1 = n - 1;

    NordhausGaddum r;
    r.m1_sum_direct = m1 + zagreb_exact(gc, 2);
    r.m2_sum_direct = second_zagreb(g) + second_zagreb(gc);
    r.f_sum_direct = zagreb_exact(g, 3) + zagreb_exact(gc, 3);

    r.m1_sum_identity = n * nm1 * nm1 - 4 * m * nm1 + 2 * m1;
    r.m2_sum_identity = n * ipow(nm1, 3) / 2 + 2 * m * m - 3 * m * nm1 * nm1 +
                        (n - Rational(3, 2)) * m1;
    r.f_sum_identity = n * ipow(nm1, 3) - 6 * m * nm1 * nm1 + 3 * nm1 * m1;

    if (g.order() < 2)
        throw HypothesisError("Nordhaus-Gaddum substitution needs n >= 2");
    r.m1_sum_lb = n * nm1 * nm1 - 4 * m * nm1 + 2 * m1_lb;
    r.m2_sum_lb = n * ipow(nm1, 3) / 2 + 2 * m * m - 3 * m * nm1 * nm1 +
                  (n - Rational(3, 2)) * m1_lb;
    r.f_sum_lb = n * ipow(nm1, 3) - 6 * m * nm1 * nm1 + 3 * nm1 * m1_lb;
    return r;
}

CoindexBounds coindex_bounds(const Graph& g, const BoundSpec& spec,
                             const Rational& m1_lb) {
    DegreeSequence ds(g);
    Rational n(g.order()), m(g.size());
    CoindexBounds r;
    r.index_plus_coindex_lb = (n - 1) * zagreb_lower_bound(ds, spec);
    r.m2_plus_coindex_ub = 2 * m * m - m1_lb / 2;
    r.m1_coindex_ub = 2 * m * (n - 1) - m1_lb;
    r.f_plus_coindex_lb = (n - 1) * m1_lb;
    return r;
}

}  // namespace zagreb
