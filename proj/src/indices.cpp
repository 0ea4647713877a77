#include "zagreb/indices.hpp"

#include <cmath>
#include <vector>

#include "zagreb/errors.hpp"

namespace zagreb {

Rational zagreb_exact(const DegreeSequence& ds, long alpha) {
    if (alpha < 0 && ds.delta() == 0)
        throw DomainError("delta = 0: negative exponent undefined");
    Rational sum(0);
    for (int d : ds.values()) {
        if (d == 0)
            sum += alpha == 0 ? 1 : 0;  // 0^0 = 1 so Z_0 = n holds
        else
            sum += ipow(Rational(d), alpha);
    }
    return sum;
}

Rational zagreb_exact(const Graph& g, long alpha) {
    return zagreb_exact(DegreeSequence(g), alpha);
}

double zagreb_real(const DegreeSequence& ds, double alpha) {
    if (alpha < 0 && ds.delta() == 0)
        throw DomainError("delta = 0: negative exponent undefined");
    double sum = 0;
    for (int d : ds.values()) {
        if (d == 0)
            sum += alpha == 0 ? 1.0 : 0.0;
        else
            sum += std::pow(static_cast<double>(d), alpha);
    }
    return sum;
}

Rational second_zagreb(const Graph& g) {
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    Rational sum(0);
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) sum += Rational(deg[i]) * deg[j];
    return sum;
}

Rational zagreb_coindex_exact(const Graph& g, long alpha) {
    std::vector<int> deg(g.order());
    int delta = g.order();
    for (int v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        delta = std::min(delta, deg[v]);
    }
    if (alpha < 1 && delta == 0)
        throw DomainError("delta = 0: coindex exponent undefined");
    Rational sum(0);
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            if (g.adjacent(i, j)) continue;
            for (int d : {deg[i], deg[j]}) {
                if (d == 0)
                    sum += alpha == 1 ? 1 : 0;
                else
                    sum += ipow(Rational(d), alpha - 1);
            }
        }
    }
    return sum;
}

double zagreb_coindex_real(const Graph& g, double alpha) {
    std::vector<int> deg(g.order());
    int delta = g.order();
    for (int v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        delta = std::min(delta, deg[v]);
    }
    if (alpha < 1 && delta == 0)
        throw DomainError("delta = 0: coindex exponent undefined");
    double sum = 0;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            if (g.adjacent(i, j)) continue;
            for (int d : {deg[i], deg[j]}) {
                if (d == 0)
                    sum += alpha == 1 ? 1.0 : 0.0;
                else
                    sum += std::pow(static_cast<double>(d), alpha - 1);
            }
        }
    }
    return sum;
}

Rational second_zagreb_coindex(const Graph& g) {
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    Rational sum(0);
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) sum += Rational(deg[i]) * deg[j];
    return sum;
}

namespace {

double rayleigh_shifted(const Graph& g, std::vector<double>& v,
                        const SpectralSettings& s, long& iters, bool& ok) {
    int n = g.order();
    std::vector<double> w(n);
    double rq_prev = -1e300;
    ok = false;
    for (iters = 0; iters < s.max_iterations; ++iters) {
        for (int i = 0; i < n; ++i) {
            double acc = v[i];  // the +I shift
            for (int j = 0; j < n; ++j)
                if (g.adjacent(i, j)) acc += v[j];
            w[i] = acc;
        }
        double norm2 = 0, dot = 0;
        for (int i = 0; i < n; ++i) {
            dot += v[i] * w[i];
            norm2 += v[i] * v[i];
        }
        double rq = dot / norm2;
        double wn = 0;
        for (double x : w) wn += x * x;
        wn = std::sqrt(wn);
        if (wn == 0) return rq;  // A+I annihilated v; caller restarts
        for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
        if (std::abs(rq - rq_prev) < s.rq_tol) {
            ok = true;
            return rq;
        }
        rq_prev = rq;
    }
    return rq_prev;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralSettings& s) {
    int n = g.order();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    long iters = 0;
    bool ok = false;
    double rq = rayleigh_shifted(g, v, s, iters, ok);
    if (!ok) {
        // fixed perturbation fallback
        for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * (i + 1);
        long iters2 = 0;
        rq = rayleigh_shifted(g, v, s, iters2, ok);
        iters += iters2;
        if (!ok)
            throw DomainError("power iteration did not converge; residual rq = " +
                              format_double(rq));
    }
    return {rq - 1.0, iters, true};
}

}  // namespace zagreb
