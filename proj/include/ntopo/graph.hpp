#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ntopo/corpus.hpp"

namespace ntopo {

// Undirected lemma co-occurrence graph. Edge keys are ordered pairs with
// first < second; containers are ordered so every traversal is canonical
// regardless of construction order.
struct CooccurrenceGraph {
    using Edge = std::pair<std::string, std::string>;

    std::set<std::string> nodes;
    std::map<Edge, int64_t> edge_counts;

    static Edge make_edge(const std::string& a, const std::string& b) {
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    void add_node(const std::string& n) { nodes.insert(n); }
    void add_edge(const std::string& a, const std::string& b, int64_t count = 1);

    size_t num_nodes() const { return nodes.size(); }
    size_t num_edges() const { return edge_counts.size(); }
    bool has_edge(const std::string& a, const std::string& b) const {
        return edge_counts.count(make_edge(a, b)) > 0;
    }
    std::map<std::string, size_t> degrees() const;

    // union: node/edge sets union, counts sum
    void merge(const CooccurrenceGraph& other);

    bool operator==(const CooccurrenceGraph&) const = default;
};

struct WindowGraph {
    int index = 0;  // 1-based
    std::string start_date;
    std::string end_date;
    CooccurrenceGraph graph;
};

// Every unordered pair of distinct lemmas within a phrase gains an edge;
// counts accumulate per phrase occurrence.
CooccurrenceGraph build_daily_graph(const std::vector<Phrase>& phrases);

// Sliding union of w consecutive graphs advanced by stride s. Window k
// (1-based) covers input indices (k-1)s .. (k-1)s+w-1.
std::vector<WindowGraph> window_union(std::span<const CooccurrenceGraph> daily,
                                      std::span<const std::string> dates, int w, int s);

// Single pass: drop every node whose degree in the input is <= 1, then drop
// nodes left isolated by that pass. Nodes reduced to degree 1 are kept.
CooccurrenceGraph prune_degree_one(const CooccurrenceGraph& g);

CooccurrenceGraph flatten(std::span<const CooccurrenceGraph> daily);

// Edge dump: "a<TAB>b<TAB>count", lexicographically sorted.
std::string dump_edges(const CooccurrenceGraph& g);
void write_graph(const CooccurrenceGraph& g, const std::string& path_base);
CooccurrenceGraph read_graph(const std::string& path_base);

}  // namespace ntopo
