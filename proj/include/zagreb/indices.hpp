#ifndef ZAGREB_INDICES_HPP
#define ZAGREB_INDICES_HPP

#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

// Z_alpha(G) = sum d_i^alpha, exact for integer alpha. alpha < 0 requires
// delta > 0; alpha = 0 counts isolated vertices (0^0 = 1, so Z_0 = n).
Rational zagreb_exact(const DegreeSequence& ds, long alpha);
Rational zagreb_exact(const Graph& g, long alpha);

// Non-integer alpha path (also used for CLI display).
double zagreb_real(const DegreeSequence& ds, double alpha);

// M_2(G) = sum over edges of d_i d_j.
Rational second_zagreb(const Graph& g);

// Coindex sums run over unordered non-adjacent pairs i < j.
Rational zagreb_coindex_exact(const Graph& g, long alpha);
double zagreb_coindex_real(const Graph& g, double alpha);
Rational second_zagreb_coindex(const Graph& g);

struct SpectralSettings {
    double rq_tol = 1e-12;
    long max_iterations = 100000;
};

struct SpectralResult {
    double lambda1;
    long iterations;
    bool converged;
};

// Largest adjacency eigenvalue by power iteration on A + I (the shift breaks
// the +/-lambda tie of bipartite graphs). Deterministic all-ones start with a
// fixed perturbation fallback. Throws DomainError on non-convergence.
SpectralResult spectral_radius(const Graph& g, const SpectralSettings& s = {});

}  // namespace zagreb

#endif
