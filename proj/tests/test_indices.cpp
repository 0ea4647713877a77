#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zagreb/errors.hpp"
#include "zagreb/example_graphs.hpp"
#include "zagreb/indices.hpp"

using namespace zagreb;

namespace {
Graph k4() { return parse_graph6("C~"); }
Graph p4() { return parse_edge_list("n 4\n1 2\n2 3\n3 4\n"); }
Graph star5() { return parse_edge_list("n 5\n1 2\n1 3\n1 4\n1 5\n"); }
}  // namespace

TEST_CASE("closed forms on K4") {
    Graph g = k4();
    CHECK(zagreb_exact(g, 2) == 36);
    CHECK(second_zagreb(g) == 54);
    CHECK(zagreb_exact(g, 3) == 108);
    CHECK(zagreb_exact(g, -1) == Rational(4, 3));
    CHECK(zagreb_exact(g, -2) == Rational(4, 9));
    CHECK(zagreb_exact(g, 0) == 4);
    CHECK(zagreb_exact(g, 1) == 12);
    // no non-adjacent pairs: all coindices vanish
    CHECK(zagreb_coindex_exact(g, 2) == 0);
    CHECK(second_zagreb_coindex(g) == 0);
}

TEST_CASE("path on four vertices") {
    Graph g = p4();
    CHECK(zagreb_exact(g, 2) == 10);
    CHECK(second_zagreb(g) == 8);
    CHECK(zagreb_exact(g, 3) == 18);
    CHECK(zagreb_exact(g, -1) == 3);
    // coindex over the three non-adjacent pairs (1,3), (1,4), (2,4)
    CHECK(zagreb_coindex_exact(g, 2) == 8);
    CHECK(second_zagreb_coindex(g) == 5);
}

TEST_CASE("star: high-low degree mix") {
    Graph g = star5();
    CHECK(zagreb_exact(g, 2) == 20);
    CHECK(second_zagreb(g) == 16);
    CHECK(zagreb_exact(g, -1) == Rational(17, 4));
    CHECK(zagreb_exact(g, -2) == Rational(65, 16));
}

TEST_CASE("benchmark graph invariants") {
    Graph g1 = examples::g1(), g2 = examples::g2(), g3 = examples::g3();
    CHECK(g1.size() == 19);
    CHECK(g2.size() == 15);
    CHECK(g3.size() == 16);
    CHECK(g1.connected());
    CHECK(g2.connected());
    CHECK(g3.connected());
    CHECK(zagreb_exact(g1, 2) == 198);
    CHECK(zagreb_exact(g2, 2) == 124);
    CHECK(zagreb_exact(g3, 2) == 138);
    CHECK(DegreeSequence(g1).values() == std::vector<int>{7, 6, 6, 5, 4, 4, 4, 2});
    CHECK(DegreeSequence(g2).values() == std::vector<int>{6, 5, 4, 4, 3, 3, 3, 2});
    CHECK(DegreeSequence(g3).values() == std::vector<int>{5, 5, 5, 5, 4, 3, 3, 2});
    CHECK(zagreb_coindex_exact(g1, 2) == 68);  // (n-1)2m - M_1
}

TEST_CASE("domain errors for negative exponents with isolated vertices") {
    Graph g = parse_edge_list("n 3\n1 2\n");
    CHECK_THROWS_AS(zagreb_exact(g, -1), DomainError);
    CHECK_THROWS_AS(zagreb_exact(g, -2), DomainError);
    CHECK(zagreb_exact(g, 0) == 3);  // 0^0 = 1 by convention
    CHECK(zagreb_exact(g, 2) == 2);
}

TEST_CASE("real-exponent path agrees with the exact one") {
    DegreeSequence ds(examples::g1());
    CHECK(zagreb_real(ds, 2.0) == doctest::Approx(198.0).epsilon(1e-12));
    double z_half = zagreb_real(ds, 0.5);
    double expect = std::sqrt(7) + 2 * std::sqrt(6) + std::sqrt(5) + 3 * 2.0 +
                    std::sqrt(2);
    CHECK(z_half == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("spectral radius on known graphs") {
    auto lam = [](const Graph& g) { return spectral_radius(g).lambda1; };
    CHECK(lam(k4()) == doctest::Approx(3.0).epsilon(1e-9));
    Graph c4 = parse_edge_list("n 4\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(lam(c4) == doctest::Approx(2.0).epsilon(1e-9));  // bipartite: shift works
    Graph p3 = parse_edge_list("n 3\n1 2\n2 3\n");
    CHECK(lam(p3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(lam(star5()) == doctest::Approx(2.0).epsilon(1e-9));
    Graph k33 = parse_edge_list("n 6\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n");
    CHECK(lam(k33) == doctest::Approx(3.0).epsilon(1e-9));
    SpectralResult r = spectral_radius(examples::g1());
    CHECK(r.converged);
    CHECK(r.lambda1 >= std::sqrt(198.0 / 8) - 1e-9);
}
