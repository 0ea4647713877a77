#ifndef ZAGREB_ENUMERATE_HPP
#define ZAGREB_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

// Hard ceiling for exhaustive labeled enumeration; ZB_MAX_N may lower the
// effective default but never raise it past this.
inline constexpr int kEnumerationHardCap = 9;

struct CorpusSpec {
    int n_min = 3;
    int n_max = 6;
    bool connected_only = true;
    bool dedup_isomorphic = false;
    bool min_degree_positive = true;
};

void validate_corpus(const CorpusSpec& spec);

// Canonical edge mask: minimum over vertex orderings that respect the
// (degree, sorted neighbour-degree multiset) partition. Isomorphic graphs
// share the value; the restriction keeps n = 7 corpora tractable.
std::uint64_t canonical_edge_mask(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Visits every corpus graph in deterministic order: n ascending, then edge
// bitmask ascending (dedup keeps the first representative of each class).
void for_each_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& fn);

// Partitioned variant for parallel consumers: visits the slice of labeled
// graphs whose edge bitmask is congruent to `part` modulo `parts`. Dedup
// corpora are not partitionable this way and are rejected.
void for_each_graph_partition(const CorpusSpec& spec, int part, int parts,
                              const std::function<void(const Graph&)>& fn);

std::vector<Graph> collect_graphs(const CorpusSpec& spec);

}  // namespace zagreb

#endif
