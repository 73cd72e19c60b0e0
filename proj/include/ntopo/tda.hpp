#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ntopo/embed.hpp"

namespace ntopo {

struct Bar {
    double birth = 0.0;
    double death = 0.0;  // +inf for essential classes
    bool truncated = false;

    auto operator<=>(const Bar&) const = default;
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<Bar> pairs;  // kept sorted by (birth, death)

    size_t size() const { return pairs.size(); }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RipsConfig {
    int max_dim = 1;                 // 0 or 1
    double max_edge_length = kInf;   // kInf = resolve to enclosing radius
};

// min over points of the max distance to any other point; truncating the
// filtration there keeps every finite H0/H1 feature.
double enclosing_radius(const PointCloud& cloud);

// Vietoris-Rips persistence over Z/2 in dimensions 0 and 1.
//
// H0 comes from Kruskal union-find on the sorted edge list: n bars born at
// 0 whose finite deaths are the MST edge lengths, one bar (0, inf) per
// component alive at the threshold. H1 comes from reducing the
// triangle/edge boundary matrix in filtration order (diameter, then
// lexicographic vertex order); the union-find pass already pairs the
// negative edges, which clears their columns, so only cycle edges can be
// pivots. Zero-length bars are dropped; cycles alive at the threshold are
// reported with death = threshold and flagged truncated.
std::pair<PersistenceDiagram, PersistenceDiagram> rips_persistence(const PointCloud& cloud,
                                                                   const RipsConfig& cfg = {});

// dump: "dim birth death truncated_flag" rows sorted by (dim, birth, death);
// "inf" literal for essential classes
std::string dump_diagram(const PersistenceDiagram& d0, const PersistenceDiagram& d1);
void write_diagram(const PersistenceDiagram& d0, const PersistenceDiagram& d1,
                   const std::string& path);
std::pair<PersistenceDiagram, PersistenceDiagram> read_diagram(const std::string& path);

}  // namespace ntopo
