#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive: full boundary-matrix reduction, exhaustive matching
// enumeration, Jacobi rotations. None of them share code with the library
// paths they check.

#include <utility>
#include <vector>

#include "ntopo/embed.hpp"
#include "ntopo/metrics.hpp"
#include "ntopo/tda.hpp"

namespace ntopo::oracle {

// Full boundary-matrix persistence over all simplices up to dimension 2,
// reduced left to right in filtration order (diameter, dimension,
// lexicographic vertices). Essential classes get death = +inf.
std::pair<PersistenceDiagram, PersistenceDiagram> naive_rips_persistence(const PointCloud& cloud,
                                                                         double threshold);

// Prim's algorithm; returns the n-1 MST edge lengths sorted ascending.
std::vector<double> mst_lengths(const PointCloud& cloud);

// Exhaustive minimum over every diagonal-augmented matching.
double brute_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int p,
                         QNorm q);

// Exact bottleneck distance: binary search over candidate radii with an
// augmenting-path feasibility check. Infinite bars must match one to one.
double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

// Cyclic Jacobi eigendecomposition of a dense symmetric matrix; returns
// (eigenvalues descending, row-major eigenvectors aligned with them).
std::pair<std::vector<double>, std::vector<std::vector<double>>> jacobi_eigs(
    std::vector<std::vector<double>> m);

}  // namespace ntopo::oracle
