#include "ntopo/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "ntopo/common.hpp"

namespace ntopo {

namespace {

PointCloud pca_2d(const PointCloud& cloud) {
    const int n = static_cast<int>(cloud.size());
    const int d = cloud.dims;
    Eigen::MatrixXd x(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) x(i, j) = cloud.data[static_cast<size_t>(i) * d + j];
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;

    const Eigen::MatrixXd cov = (x.transpose() * x) / std::max(1, n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    // eigenvalues ascending; take the top two axes with a fixed sign
    Eigen::MatrixXd axes(d, 2);
    for (int k = 0; k < 2; ++k) {
        Eigen::VectorXd v = eig.eigenvectors().col(d - 1 - k);
        int imax = 0;
        for (int j = 1; j < d; ++j)
            if (std::abs(v[j]) > std::abs(v[imax])) imax = j;
        if (v[imax] < 0) v = -v;
        axes.col(k) = v;
    }
    const Eigen::MatrixXd y = x * axes;

    PointCloud out;
    out.dims = 2;
    out.labels = cloud.labels;
    out.data.resize(static_cast<size_t>(n) * 2);
    for (int i = 0; i < n; ++i) {
        out.data[i * 2] = y(i, 0);
        out.data[i * 2 + 1] = y(i, 1);
    }
    return out;
}

struct KnnGraph {
    std::vector<std::vector<int>> idx;     // n x k
    std::vector<std::vector<double>> dist;  // n x k, sorted ascending
};

KnnGraph exact_knn(const PointCloud& cloud, int k) {
    const int n = static_cast<int>(cloud.size());
    KnnGraph g;
    g.idx.resize(n);
    g.dist.resize(n);
    std::vector<std::pair<double, int>> cand(n - 1);
    for (int i = 0; i < n; ++i) {
        int m = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            cand[m++] = {euclidean(cloud.point(i), cloud.point(j)), j};
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        g.idx[i].resize(k);
        g.dist[i].resize(k);
        for (int r = 0; r < k; ++r) {
            g.dist[i][r] = cand[r].first;
            g.idx[i][r] = cand[r].second;
        }
    }
    return g;
}

// solve sum_j exp(-max(0, d_j - rho) / sigma) = log2(k) by bisection
double calibrate_sigma(const std::vector<double>& dists, double rho, double target) {
    double lo = 0.0, hi = std::numeric_limits<double>::infinity(), mid = 1.0;
    for (int it = 0; it < 64; ++it) {
        double sum = 0.0;
        for (double d : dists) {
            const double gap = d - rho;
            sum += gap <= 0.0 ? 1.0 : std::exp(-gap / mid);
        }
        if (std::abs(sum - target) < 1e-5) break;
        if (sum > target) {
            hi = mid;
            mid = (lo + hi) / 2.0;
        } else {
            lo = mid;
            mid = std::isinf(hi) ? mid * 2.0 : (lo + hi) / 2.0;
        }
    }
    return std::max(mid, 1e-10);
}

struct FuzzyEdge {
    int i, j;
    double weight;
};

std::vector<FuzzyEdge> fuzzy_graph(const KnnGraph& knn, int k) {
    const int n = static_cast<int>(knn.idx.size());
    const double target = std::log2(static_cast<double>(k));
    std::vector<double> rho(n), sigma(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = 0.0;
        for (double d : knn.dist[i])
            if (d > 0.0) {
                rho[i] = d;
                break;
            }
        sigma[i] = calibrate_sigma(knn.dist[i], rho[i], target);
    }

    std::map<std::pair<int, int>, std::pair<double, double>> directed;  // (i<j) -> (w_ij, w_ji)
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < k; ++r) {
            const int j = knn.idx[i][r];
            const double gap = knn.dist[i][r] - rho[i];
            const double w = gap <= 0.0 ? 1.0 : std::exp(-gap / sigma[i]);
            auto kk = std::minmax(i, j);
            auto& slot = directed[{kk.first, kk.second}];
            (i < j ? slot.first : slot.second) = std::max(i < j ? slot.first : slot.second, w);
        }
    }

    std::vector<FuzzyEdge> edges;
    edges.reserve(directed.size());
    for (const auto& [key, w] : directed) {
        const double u = w.first + w.second - w.first * w.second;  // fuzzy set union
        if (u > 0.0) edges.push_back({key.first, key.second, u});
    }
    return edges;
}

// Two smallest nontrivial eigenvectors of the normalized Laplacian,
// equivalently the 2nd/3rd largest of D^-1/2 W D^-1/2. Dense solve for
// small graphs, subspace iteration otherwise.
Eigen::MatrixXd spectral_init(const std::vector<FuzzyEdge>& edges, int n, uint64_t seed) {
    std::vector<double> degree(n, 0.0);
    for (const auto& e : edges) {
        degree[e.i] += e.weight;
        degree[e.j] += e.weight;
    }
    std::vector<double> dinv(n);
    for (int i = 0; i < n; ++i) dinv[i] = degree[i] > 0.0 ? 1.0 / std::sqrt(degree[i]) : 0.0;

    Eigen::MatrixXd vecs;
    if (n <= 512) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (const auto& e : edges) {
            const double v = e.weight * dinv[e.i] * dinv[e.j];
            m(e.i, e.j) = v;
            m(e.j, e.i) = v;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
        vecs.resize(n, 2);
        vecs.col(0) = eig.eigenvectors().col(n - 2);
        vecs.col(1) = eig.eigenvectors().col(n >= 3 ? n - 3 : 0);
    } else {
        // orthogonal iteration on (M + I) with a fixed round count
        const int kdim = 5;
        std::mt19937_64 rng(mix_seed(seed, 0x5eed));
        Eigen::MatrixXd q(n, kdim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < kdim; ++j) q(i, j) = rng_unit(rng) - 0.5;
        auto apply = [&](const Eigen::MatrixXd& in) {
            Eigen::MatrixXd out = in;  // + I
            for (const auto& e : edges) {
                const double v = e.weight * dinv[e.i] * dinv[e.j];
                out.row(e.i) += v * in.row(e.j);
                out.row(e.j) += v * in.row(e.i);
            }
            return out;
        };
        for (int it = 0; it < 300; ++it) {
            q = apply(q);
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(q);
            q = qr.householderQ() * Eigen::MatrixXd::Identity(n, kdim);
        }
        const Eigen::MatrixXd mq = apply(q);
        const Eigen::MatrixXd small = q.transpose() * mq;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig((small + small.transpose()) / 2.0);
        Eigen::MatrixXd ritz = q * eig.eigenvectors();  // columns ascending
        vecs.resize(n, 2);
        vecs.col(0) = ritz.col(kdim - 2);
        vecs.col(1) = ritz.col(kdim - 3);
    }

    for (int k = 0; k < 2; ++k) {
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(vecs(i, k)) > std::abs(vecs(imax, k))) imax = i;
        if (vecs(imax, k) < 0) vecs.col(k) = -vecs.col(k);
        const double scale = std::abs(vecs(imax, k));
        if (scale > 0.0) vecs.col(k) *= 10.0 / scale;
    }
    return vecs;
}

}  // namespace

CurveParams fit_curve_params(double min_dist) {
    // least squares of 1/(1 + a x^(2b)) against the min_dist offset
    // exponential, Gauss-Newton with step damping
    const int m = 300;
    std::vector<double> xs(m), ys(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = 3.0 * (i + 1) / m;
        ys[i] = xs[i] <= min_dist ? 1.0 : std::exp(-(xs[i] - min_dist));
    }
    double a = 1.0, b = 1.0;
    for (int it = 0; it < 200; ++it) {
        double jaa = 0, jab = 0, jbb = 0, ga = 0, gb = 0;
        for (int i = 0; i < m; ++i) {
            const double xp = std::pow(xs[i], 2.0 * b);
            const double den = 1.0 + a * xp;
            const double f = 1.0 / den;
            const double r = f - ys[i];
            const double dfda = -xp / (den * den);
            const double dfdb = -2.0 * a * xp * std::log(xs[i]) / (den * den);
            jaa += dfda * dfda;
            jab += dfda * dfdb;
            jbb += dfdb * dfdb;
            ga += dfda * r;
            gb += dfdb * r;
        }
        const double lm = 1e-6;
        const double det = (jaa + lm) * (jbb + lm) - jab * jab;
        if (det == 0.0) break;
        const double da = (-(ga) * (jbb + lm) + jab * gb) / det;
        const double db = (jab * ga - (jaa + lm) * gb) / det;
        a += da;
        b += db;
        a = std::clamp(a, 1e-3, 1e3);
        b = std::clamp(b, 1e-3, 10.0);
        if (std::abs(da) + std::abs(db) < 1e-12) break;
    }
    return {a, b};
}

PointCloud reduce_to_2d(const PointCloud& cloud, const ReduceConfig& cfg) {
    const int n = static_cast<int>(cloud.size());
    if (cfg.method == ReduceMethod::Pca) {
        if (n < 2) throw std::invalid_argument("reduce_to_2d: PCA needs at least 2 points; skip this window");
        return pca_2d(cloud);
    }
    if (cfg.n_neighbors < 2) throw std::invalid_argument("reduce_to_2d: n_neighbors must be >= 2");
    if (cfg.min_dist < 0.0 || cfg.min_dist >= 1.0)
        throw std::invalid_argument("reduce_to_2d: min_dist must be in [0, 1)");
    if (n < cfg.n_neighbors + 1)
        throw std::invalid_argument("reduce_to_2d: cloud of " + std::to_string(n) +
                                    " points is smaller than n_neighbors + 1; skip this window");

    const KnnGraph knn = exact_knn(cloud, cfg.n_neighbors);
    const std::vector<FuzzyEdge> edges = fuzzy_graph(knn, cfg.n_neighbors);
    Eigen::MatrixXd coords = spectral_init(edges, n, cfg.seed);

    // seeded jitter keeps coincident spectral coordinates apart
    std::mt19937_64 rng(mix_seed(cfg.seed, 0x1a70u));
    for (int i = 0; i < n; ++i) {
        coords(i, 0) += (rng_unit(rng) - 0.5) * 2e-4;
        coords(i, 1) += (rng_unit(rng) - 0.5) * 2e-4;
    }

    const auto [a, b] = fit_curve_params(cfg.min_dist);
    double max_w = 0.0;
    for (const auto& e : edges) max_w = std::max(max_w, e.weight);
    const int n_edges = static_cast<int>(edges.size());
    std::vector<double> epochs_per_sample(n_edges), next_sample(n_edges), next_neg(n_edges);
    const double neg_rate = 5.0;
    for (int e = 0; e < n_edges; ++e) {
        epochs_per_sample[e] = max_w / edges[e].weight;
        next_sample[e] = epochs_per_sample[e];
        next_neg[e] = epochs_per_sample[e] / neg_rate;
    }

    auto clip4 = [](double v) { return std::clamp(v, -4.0, 4.0); };

    for (int epoch = 1; epoch <= cfg.n_epochs; ++epoch) {
        const double alpha = 1.0 - static_cast<double>(epoch - 1) / cfg.n_epochs;
        for (int e = 0; e < n_edges; ++e) {
            if (next_sample[e] > epoch) continue;
            const int i = edges[e].i;
            const int j = edges[e].j;
            double dx = coords(i, 0) - coords(j, 0);
            double dy = coords(i, 1) - coords(j, 1);
            double d2 = dx * dx + dy * dy;
            if (d2 > 0.0) {
                const double pd = std::pow(d2, b);
                const double coef = -2.0 * a * b * pd / (d2 * (a * pd + 1.0));
                const double gx = clip4(coef * dx) * alpha;
                const double gy = clip4(coef * dy) * alpha;
                coords(i, 0) += gx;
                coords(i, 1) += gy;
                coords(j, 0) -= gx;
                coords(j, 1) -= gy;
            }
            next_sample[e] += epochs_per_sample[e];

            const int n_negative =
                static_cast<int>((epoch - next_neg[e]) / (epochs_per_sample[e] / neg_rate));
            for (int t = 0; t < n_negative; ++t) {
                const int other = static_cast<int>(rng_below(rng, n));
                if (other == i) continue;
                dx = coords(i, 0) - coords(other, 0);
                dy = coords(i, 1) - coords(other, 1);
                d2 = dx * dx + dy * dy;
                double gx, gy;
                if (d2 > 0.0) {
                    const double coef = 2.0 * b / ((0.001 + d2) * (a * std::pow(d2, b) + 1.0));
                    gx = clip4(coef * dx) * alpha;
                    gy = clip4(coef * dy) * alpha;
                } else {
                    gx = 4.0 * alpha;
                    gy = 4.0 * alpha;
                }
                coords(i, 0) += gx;
                coords(i, 1) += gy;
            }
            next_neg[e] += n_negative * (epochs_per_sample[e] / neg_rate);
        }
    }

    PointCloud out;
    out.dims = 2;
    out.labels = cloud.labels;
    out.data.resize(static_cast<size_t>(n) * 2);
    for (int i = 0; i < n; ++i) {
        out.data[i * 2] = coords(i, 0);
        out.data[i * 2 + 1] = coords(i, 1);
    }
    return out;
}

}  // namespace ntopo
