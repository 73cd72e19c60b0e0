#pragma once

#include <cstdint>

#include "ntopo/embed.hpp"

namespace ntopo {

enum class ReduceMethod { Manifold, Pca };

struct ReduceConfig {
    ReduceMethod method = ReduceMethod::Manifold;
    int n_neighbors = 15;
    double min_dist = 0.1;
    int n_epochs = 200;
    uint64_t seed = 0;
};

// Projects a point cloud to 2-D, preserving labels and cardinality.
//
// MANIFOLD is the uniform-manifold scheme: exact Euclidean k-NN, per-point
// bandwidths solved by bisection against the log2(k) target (64 rounds),
// fuzzy union a+b-ab, spectral initialization from the two smallest
// nontrivial eigenvectors of the normalized graph Laplacian, then
// attraction/repulsion SGD for n_epochs. PCA is the exact linear
// projection onto the top two principal axes. Both are single-threaded
// and deterministic for a fixed seed.
//
// MANIFOLD needs |cloud| >= n_neighbors + 1 and PCA |cloud| >= 2; too few
// points throws so the caller can skip the window.
PointCloud reduce_to_2d(const PointCloud& cloud, const ReduceConfig& cfg);

// Fitted curve parameters for the low-dimensional similarity kernel
// 1 / (1 + a d^(2b)); exposed for tests.
struct CurveParams {
    double a = 0.0;
    double b = 0.0;
};
CurveParams fit_curve_params(double min_dist);

}  // namespace ntopo
