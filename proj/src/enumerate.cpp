#include "zagreb/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "zagreb/errors.hpp"

namespace zagreb {

void validate_corpus(const CorpusSpec& spec) {
    if (spec.n_min < 1 || spec.n_min > spec.n_max)
        throw HypothesisError("need 1 <= n_min <= n_max");
    int cap = kEnumerationHardCap;
    if (const char* env = std::getenv("ZB_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 1 && v < cap) cap = v;  // may lower the guard, never raise it
    }
    if (spec.n_max > cap)
        throw CapacityError("n_max above exhaustive-enumeration guard");
}

namespace {

// Vertex classes ordered by (degree desc, neighbour-degree multiset desc);
// the canonical search permutes vertices only within a class.
std::vector<std::vector<int>> invariant_classes(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<std::vector<int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> key;
        key.push_back(g.degree(v));
        std::vector<int> nbr;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u)) nbr.push_back(g.degree(u));
        std::sort(nbr.rbegin(), nbr.rend());
        key.insert(key.end(), nbr.begin(), nbr.end());
        keyed[v] = {std::move(key), v};
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
        classes.back().push_back(keyed[i].second);
    }
    return classes;
}

std::uint64_t mask_under_perm(const Graph& g, const std::vector<int>& perm) {
    // perm[p] = original vertex placed at position p
    int n = g.order();
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.adjacent(perm[i], perm[j])) mask |= std::uint64_t{1} << bit;
    return mask;
}

}  // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
    auto classes = invariant_classes(g);
    std::vector<int> perm;
    perm.reserve(g.order());
    for (auto& c : classes) perm.insert(perm.end(), c.begin(), c.end());

    std::uint64_t best = mask_under_perm(g, perm);
    // iterate the product of within-class permutations
    std::vector<std::size_t> offsets;
    std::size_t off = 0;
    for (auto& c : classes) {
        offsets.push_back(off);
        off += c.size();
        std::sort(perm.begin() + offsets.back(), perm.begin() + off);
    }
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == classes.size()) {
            best = std::min(best, mask_under_perm(g, perm));
            return;
        }
        auto lo = perm.begin() + offsets[ci];
        auto hi = lo + classes[ci].size();
        do {
            rec(ci + 1);
        } while (std::next_permutation(lo, hi));
    };
    rec(0);
    return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_edge_mask(a) == canonical_edge_mask(b);
}

namespace {

bool passes_filters(const Graph& g, const CorpusSpec& spec) {
    // K_1 has no positive-degree vertex yet is the whole n = 1 corpus
    if (spec.min_degree_positive && g.order() >= 2) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0) return false;
    }
    if (spec.connected_only && !g.connected()) return false;
    return true;
}

void visit_n(int n, const CorpusSpec& spec, std::uint64_t part, std::uint64_t parts,
             const std::function<void(const Graph&)>& fn) {
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t{1} << pairs;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (parts > 1 && mask % parts != part) continue;
        Graph g = Graph::from_edge_mask(n, mask);
        if (!passes_filters(g, spec)) continue;
        if (spec.dedup_isomorphic) {
            if (!seen.insert(canonical_edge_mask(g)).second) continue;
        }
        fn(g);
    }
}

}  // namespace

void for_each_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& fn) {
    validate_corpus(spec);
    for (int n = spec.n_min; n <= spec.n_max; ++n) visit_n(n, spec, 0, 1, fn);
}

void for_each_graph_partition(const CorpusSpec& spec, int part, int parts,
                              const std::function<void(const Graph&)>& fn) {
    validate_corpus(spec);
    if (spec.dedup_isomorphic)
        throw HypothesisError("dedup corpora are not partitionable");
    if (parts < 1 || part < 0 || part >= parts)
        throw HypothesisError("bad partition index");
    for (int n = spec.n_min; n <= spec.n_max; ++n)
        visit_n(n, spec, static_cast<std::uint64_t>(part),
                static_cast<std::uint64_t>(parts), fn);
}

std::vector<Graph> collect_graphs(const CorpusSpec& spec) {
    std::vector<Graph> out;
    for_each_graph(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace zagreb
