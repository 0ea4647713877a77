#include "zagreb/oracle.hpp"

#include "zagreb/errors.hpp"
#include "zagreb/indices.hpp"

namespace zagreb::oracle {

namespace {

Rational sq(const Rational& x) { return x * x; }

Rational dpow(const DegreeSequence& ds, int pos, long alpha) {
    return ipow(Rational(ds.at(pos)), alpha);
}

}  // namespace

Rational theorem_bound(const DegreeSequence& ds, long alpha,
                       const std::vector<int>& removed, int j, int k) {
    int n = ds.n();
    Rational za = zagreb_exact(ds, alpha);
    Rational xj = dpow(ds, j, alpha);
    Rational xk = dpow(ds, k, alpha);
    Rational pair_half = (xj + xk) / 2;

    if (removed.empty()) {
        if (n < 3) throw HypothesisError("needs n >= 3");
        return sq(za) / n + sq(xj - xk) / 2 +
               Rational(2 * n) / (n - 2) * sq(za / n - pair_half);
    }
    if (removed.size() == 1) {
        if (n < 4) throw HypothesisError("needs n >= 4");
        Rational xl = dpow(ds, removed[0], alpha);
        Rational rest = za - xl;
        return dpow(ds, removed[0], 2 * alpha) + sq(rest) / (n - 1) +
               sq(xj - xk) / 2 +
               Rational(2 * (n - 1)) / (n - 3) * sq(rest / (n - 1) - pair_half);
    }
    if (removed.size() == 2) {
        if (n < 5) throw HypothesisError("needs n >= 5");
        Rational xl = dpow(ds, removed[0], alpha);
        Rational xm = dpow(ds, removed[1], alpha);
        Rational rest = za - xl - xm;
        // leading terms carry exponent 2*alpha, consistent with the two- and
        // three-degree statements
        return dpow(ds, removed[0], 2 * alpha) + dpow(ds, removed[1], 2 * alpha) +
               sq(rest) / (n - 2) + sq(xj - xk) / 2 +
               Rational(2 * (n - 2)) / (n - 4) * sq(rest / (n - 2) - pair_half);
    }
    throw HypothesisError("at most two removed positions");
}

Rational corollary_bound(const std::string& id, const DegreeSequence& ds) {
    int n = ds.n();
    Rational two_m(ds.degree_sum());
    Rational D(ds.Delta()), d2(ds.d2()), dn1(ds.d_nminus1()), d(ds.delta());

    if (id == "cor_zte2")
        return sq(two_m) / n + sq(D - d) / 2 +
               Rational(2 * n) / (n - 2) * sq(two_m / n - (D + d) / 2);
    if (id == "cor_z2te1")
        return sq(two_m) / n + sq(dn1 - d) / 2 +
               Rational(2 * n) / (n - 2) * sq(two_m / n - (dn1 + d) / 2);
    if (id == "cor_z2te2")
        return sq(two_m) / n + sq(D - d2) / 2 +
               Rational(2 * n) / (n - 2) * sq(two_m / n - (D + d2) / 2);
    if (id == "cor_zr31")
        return sq(D) + sq(two_m - D) / (n - 1) + sq(d2 - d) / 2 +
               Rational(2 * (n - 1)) / (n - 3) *
                   sq((two_m - D) / (n - 1) - (d2 + d) / 2);
    if (id == "cor_zr32")
        return sq(d) + sq(two_m - d) / (n - 1) + sq(D - dn1) / 2 +
               Rational(2 * (n - 1)) / (n - 3) *
                   sq((two_m - d) / (n - 1) - (D + dn1) / 2);
    if (id == "cor_xu4")
        return sq(D) + sq(d2) + sq(two_m - D - d2) / (n - 2) + sq(dn1 - d) / 2 +
               Rational(2 * (n - 2)) / (n - 4) *
                   sq((two_m - D - d2) / (n - 2) - (dn1 + d) / 2);
    if (id == "cor_z24degree")
        return sq(D) + sq(d) + sq(two_m - D - d) / (n - 2) + sq(d2 - dn1) / 2 +
               Rational(2 * (n - 2)) / (n - 4) *
                   sq((two_m - D - d) / (n - 2) - (d2 + dn1) / 2);

    if (ds.delta() == 0) throw DomainError("delta = 0");
    Rational idg = zagreb_exact(ds, -1);
    Rational iD = 1 / D, id2 = 1 / d2, idn1 = 1 / dn1, idd = 1 / d;

    // The deviation terms read "(... + ...)/2" here; the printed versions of
    // the pair and one-removed statements carry a sign slip at that spot.
    if (id == "mm1_pair")
        return sq(idg) / n + sq(iD - idd) / 2 +
               Rational(2 * n) / (n - 2) * sq(idg / n - (iD + idd) / 2);
    if (id == "mm1_one")
        return sq(iD) + sq(idg - iD) / (n - 1) + sq(id2 - idd) / 2 +
               Rational(2 * (n - 1)) / (n - 3) *
                   sq((idg - iD) / (n - 1) - (id2 + idd) / 2);
    if (id == "mm1_two")
        return sq(iD) + sq(idd) + sq(idg - iD - idd) / (n - 2) +
               sq(id2 - idn1) / 2 +
               Rational(2 * (n - 2)) / (n - 4) *
                   sq((idg - iD - idd) / (n - 2) - (id2 + idn1) / 2);

    throw HypothesisError("unknown corollary id: " + id);
}

}  // namespace zagreb::oracle
