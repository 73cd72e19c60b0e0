#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ntopo/graph.hpp"

namespace ntopo {

struct WalkConfig {
    int n_walks_train = 100000;
    int n_walks_infer = 4000;
    int walk_length = 40;
    uint64_t seed = 0;
};

// Random walks over a graph, stored as indices into `vocab` (the graph's
// node labels in sorted order).
struct Walks {
    std::vector<std::string> vocab;
    std::vector<std::vector<uint32_t>> paths;

    std::vector<std::vector<std::string>> as_labels() const;
};

// Starts round-robin over a seed-shuffled node list so every node is
// visited; each step picks a uniform random neighbor. Per-walk generators
// are derived from (seed, walk index), so a parallel run agrees with a
// serial one.
Walks random_walks(const CooccurrenceGraph& g, int n_walks, int walk_length, uint64_t seed);

struct NodeVectors {
    int dims = 0;
    std::map<std::string, std::vector<double>> table;
};

struct SkipgramConfig {
    int dims = 64;
    int context = 3;
    int epochs = 10;
    int negatives = 5;
    double lr = 0.025;
    uint64_t seed = 0;
};

// Skip-gram with negative sampling over the walk corpus. Noise distribution
// is unigram^(3/4); learning rate decays linearly from lr to lr/100 across
// all (center, context) updates. Single-threaded and bitwise reproducible
// for a fixed seed.
NodeVectors train_skipgram(const Walks& walks, const SkipgramConfig& cfg);

struct PointCloud {
    int dims = 0;
    std::vector<double> data;  // row-major, labels.size() x dims
    std::vector<std::string> labels;

    size_t size() const { return labels.size(); }
    std::span<const double> point(size_t i) const { return {data.data() + i * dims, static_cast<size_t>(dims)}; }
    std::span<double> point(size_t i) { return {data.data() + i * dims, static_cast<size_t>(dims)}; }
};

// One point per edge: the midpoint of the endpoint vectors. Labels are
// "min|max"; points come out sorted by label. Edges with an endpoint
// missing from the table are skipped with a warning.
PointCloud edge_vectors(const CooccurrenceGraph& g, const NodeVectors& nv);

// dump format: header "dims=<d>", then "label v1 .. vd" at full precision
std::string dump_vectors(const PointCloud& cloud);
void write_vectors(const PointCloud& cloud, const std::string& path);
PointCloud read_vectors(const std::string& path);

PointCloud to_cloud(const NodeVectors& nv);
NodeVectors to_node_vectors(const PointCloud& cloud);

double euclidean(std::span<const double> a, std::span<const double> b);

}  // namespace ntopo
