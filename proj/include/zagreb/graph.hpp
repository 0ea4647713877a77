#ifndef ZAGREB_GRAPH_HPP
#define ZAGREB_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zagreb {

// Simple undirected graph. Vertices are 0-based internally; every textual
// interface (edge lists, sorted-degree positions) is 1-based.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int i, int j) const { return adj_[idx(i, j)]; }
    void add_edge(int i, int j);  // no-op on duplicates, rejects loops

    int degree(int v) const;
    Graph complement() const;
    bool connected() const;
    bool operator==(const Graph& other) const = default;

    // Edge-selection bitmask in the fixed pair order (0,1),(0,2),...,(0,n-1),
    // (1,2),...  Only valid for n <= 11 (55 pair bits).
    std::uint64_t edge_mask() const;
    static Graph from_edge_mask(int n, std::uint64_t mask);

private:
    int n_;
    int m_;
    std::vector<bool> adj_;

    std::size_t idx(int i, int j) const;
};

// Degrees sorted non-increasing; positions are 1-based so position 1 holds
// Delta and position n holds delta.
class DegreeSequence {
public:
    explicit DegreeSequence(const Graph& g);
    explicit DegreeSequence(std::vector<int> sorted_desc);

    int n() const { return static_cast<int>(d_.size()); }
    int at(int pos) const;  // 1-based
    int Delta() const { return at(1); }
    int d2() const { return at(2); }
    int d_nminus1() const { return at(n() - 1); }
    int delta() const { return at(n()); }
    int degree_sum() const;  // = 2m
    const std::vector<int>& values() const { return d_; }

private:
    std::vector<int> d_;
};

struct GammaClass {
    int i;
    int j;
};

// True when d_i = d_{i+1} = ... = d_j on the sorted sequence. Degenerate
// classes with i >= j (which arise when a corollary's class indices collide
// at small n) are trivially satisfied.
bool gamma_member(const DegreeSequence& ds, int i, int j);

// Throws HypothesisError on i >= j or j > n; the strict query of the
// gamma_membership operation.
bool gamma_member_strict(const DegreeSequence& ds, int i, int j);

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

}  // namespace zagreb

#endif
