#include "ntopo/tda.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ntopo/common.hpp"

namespace ntopo {

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    std::vector<uint8_t> rank;

    explicit UnionFind(size_t n) : parent(n), rank(n, 0) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
    }

    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool link(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
        return true;
    }
};

struct FiltEdge {
    double diam;
    uint32_t a, b;  // a < b

    bool operator<(const FiltEdge& o) const {
        if (diam != o.diam) return diam < o.diam;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

struct FiltTriangle {
    double diam;
    uint32_t a, b, c;  // a < b < c

    bool operator<(const FiltTriangle& o) const {
        if (diam != o.diam) return diam < o.diam;
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// xor-merge of two sorted Z/2 columns
void add_column(std::vector<uint32_t>& target, const std::vector<uint32_t>& other) {
    std::vector<uint32_t> merged;
    merged.reserve(target.size() + other.size());
    size_t i = 0, j = 0;
    while (i < target.size() && j < other.size()) {
        if (target[i] < other[j]) {
            merged.push_back(target[i++]);
        } else if (other[j] < target[i]) {
            merged.push_back(other[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    merged.insert(merged.end(), target.begin() + i, target.end());
    merged.insert(merged.end(), other.begin() + j, other.end());
    target = std::move(merged);
}

}  // namespace

double enclosing_radius(const PointCloud& cloud) {
    const size_t n = cloud.size();
    if (n == 0) throw std::invalid_argument("enclosing_radius: empty cloud");
    double radius = kInf;
    for (size_t i = 0; i < n; ++i) {
        double far = 0.0;
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            far = std::max(far, euclidean(cloud.point(i), cloud.point(j)));
        }
        radius = std::min(radius, far);
    }
    return n == 1 ? 0.0 : radius;
}

std::pair<PersistenceDiagram, PersistenceDiagram> rips_persistence(const PointCloud& cloud,
                                                                   const RipsConfig& cfg) {
    const size_t n = cloud.size();
    if (n == 0) throw std::invalid_argument("rips_persistence: empty cloud");

    const double threshold =
        std::isinf(cfg.max_edge_length) ? enclosing_radius(cloud) : cfg.max_edge_length;

    std::vector<FiltEdge> edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            const double d = euclidean(cloud.point(i), cloud.point(j));
            if (d <= threshold) edges.push_back({d, i, j});
        }
    std::sort(edges.begin(), edges.end());

    PersistenceDiagram d0{0, {}};
    PersistenceDiagram d1{1, {}};

    // H0: Kruskal. Edges that merge components are the negative edges; the
    // rest create cycles and seed the H1 reduction below.
    UnionFind uf(n);
    std::vector<uint32_t> cycle_edges;  // indices into `edges`
    for (uint32_t ei = 0; ei < edges.size(); ++ei) {
        const auto& e = edges[ei];
        if (uf.link(e.a, e.b)) {
            if (e.diam > 0.0) d0.pairs.push_back({0.0, e.diam, false});
        } else {
            cycle_edges.push_back(ei);
        }
    }
    size_t components = 0;
    for (uint32_t v = 0; v < n; ++v)
        if (uf.find(v) == v) ++components;
    for (size_t i = 0; i < components; ++i) d0.pairs.push_back({0.0, kInf, false});

    if (cfg.max_dim >= 1 && !cycle_edges.empty()) {
        std::vector<std::vector<uint32_t>> nbr(n);  // neighbors above, sorted
        for (const auto& e : edges) nbr[e.a].push_back(e.b);
        for (auto& v : nbr) std::sort(v.begin(), v.end());

        auto dist = [&](uint32_t i, uint32_t j) {
            return euclidean(cloud.point(i), cloud.point(j));
        };

        std::vector<FiltTriangle> triangles;
        for (const auto& e : edges) {
            const auto& na = nbr[e.a];
            const auto& nb = nbr[e.b];
            // common neighbors above b keep each triangle enumerated once
            size_t i = 0, j = 0;
            while (i < na.size() && j < nb.size()) {
                if (na[i] < nb[j]) {
                    ++i;
                } else if (nb[j] < na[i]) {
                    ++j;
                } else {
                    const uint32_t c = na[i];
                    if (c > e.b) {
                        const double diam =
                            std::max({e.diam, dist(e.a, c), dist(e.b, c)});
                        if (diam <= threshold) triangles.push_back({diam, e.a, e.b, c});
                    }
                    ++i;
                    ++j;
                }
            }
        }
        std::sort(triangles.begin(), triangles.end());

        // rank of each edge in filtration order
        std::unordered_map<uint64_t, uint32_t> edge_rank;
        edge_rank.reserve(edges.size() * 2);
        auto key = [n](uint32_t a, uint32_t b) { return static_cast<uint64_t>(a) * n + b; };
        for (uint32_t ei = 0; ei < edges.size(); ++ei) edge_rank[key(edges[ei].a, edges[ei].b)] = ei;

        std::unordered_map<uint32_t, std::vector<uint32_t>> pivot_column;
        std::vector<char> killed(edges.size(), 0);
        std::vector<uint32_t> column;

        for (const auto& t : triangles) {
            column = {edge_rank[key(t.a, t.b)], edge_rank[key(t.a, t.c)], edge_rank[key(t.b, t.c)]};
            std::sort(column.begin(), column.end());
            while (!column.empty()) {
                const uint32_t low = column.back();
                auto it = pivot_column.find(low);
                if (it == pivot_column.end()) break;
                add_column(column, it->second);
            }
            if (column.empty()) continue;  // positive triangle
            const uint32_t low = column.back();
            killed[low] = 1;
            const double birth = edges[low].diam;
            if (t.diam > birth) d1.pairs.push_back({birth, t.diam, false});
            pivot_column.emplace(low, std::move(column));
            column.clear();
        }

        // cycles never killed below the threshold
        for (uint32_t ei : cycle_edges) {
            if (killed[ei]) continue;
            const double birth = edges[ei].diam;
            if (threshold > birth) d1.pairs.push_back({birth, threshold, true});
        }
    }

    std::sort(d0.pairs.begin(), d0.pairs.end());
    std::sort(d1.pairs.begin(), d1.pairs.end());
    return {std::move(d0), std::move(d1)};
}

std::string dump_diagram(const PersistenceDiagram& d0, const PersistenceDiagram& d1) {
    std::string out;
    for (const PersistenceDiagram* d : {&d0, &d1}) {
        for (const auto& bar : d->pairs) {
            out += std::to_string(d->dim);
            out += ' ';
            out += fmt_double(bar.birth);
            out += ' ';
            out += std::isinf(bar.death) ? "inf" : fmt_double(bar.death);
            out += ' ';
            out += bar.truncated ? '1' : '0';
            out += '\n';
        }
    }
    return out;
}

void write_diagram(const PersistenceDiagram& d0, const PersistenceDiagram& d1,
                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_diagram(d0, d1);
}

std::pair<PersistenceDiagram, PersistenceDiagram> read_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    PersistenceDiagram d0{0, {}}, d1{1, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int dim, flag;
        std::string birth, death;
        if (!(ls >> dim >> birth >> death >> flag))
            throw std::runtime_error("bad diagram line in " + path + ": " + line);
        Bar bar;
        bar.birth = std::stod(birth);
        bar.death = death == "inf" ? kInf : std::stod(death);
        bar.truncated = flag != 0;
        (dim == 0 ? d0 : d1).pairs.push_back(bar);
    }
    return {std::move(d0), std::move(d1)};
}

}  // namespace ntopo
