#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ntopo::oracle {

namespace {

struct Simplex {
    double diam;
    int dim;
    std::vector<int> verts;  // sorted

    bool operator<(const Simplex& o) const {
        if (diam != o.diam) return diam < o.diam;
        if (dim != o.dim) return dim < o.dim;
        return verts < o.verts;
    }
};

void xor_into(std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a = std::move(out);
}

}  // namespace

std::pair<PersistenceDiagram, PersistenceDiagram> naive_rips_persistence(const PointCloud& cloud,
                                                                         double threshold) {
    const int n = static_cast<int>(cloud.size());
    auto dist = [&](int i, int j) { return euclidean(cloud.point(i), cloud.point(j)); };

    std::vector<Simplex> simplices;
    for (int i = 0; i < n; ++i) simplices.push_back({0.0, 0, {i}});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(i, j);
            if (d <= threshold) simplices.push_back({d, 1, {i, j}});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double d = std::max({dist(i, j), dist(i, k), dist(j, k)});
                if (d <= threshold) simplices.push_back({d, 2, {i, j, k}});
            }
    std::sort(simplices.begin(), simplices.end());

    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < simplices.size(); ++i) index_of[simplices[i].verts] = static_cast<int>(i);

    const int m = static_cast<int>(simplices.size());
    std::vector<std::vector<int>> column(m);
    for (int j = 0; j < m; ++j) {
        const auto& s = simplices[j];
        if (s.dim == 0) continue;
        for (size_t drop = 0; drop < s.verts.size(); ++drop) {
            std::vector<int> face;
            for (size_t v = 0; v < s.verts.size(); ++v)
                if (v != drop) face.push_back(s.verts[v]);
            column[j].push_back(index_of.at(face));
        }
        std::sort(column[j].begin(), column[j].end());
    }

    std::vector<int> pivot_owner(m, -1);
    std::vector<int> killed_by(m, -1);
    for (int j = 0; j < m; ++j) {
        while (!column[j].empty()) {
            const int low = column[j].back();
            if (pivot_owner[low] == -1) {
                pivot_owner[low] = j;
                killed_by[low] = j;
                break;
            }
            xor_into(column[j], column[pivot_owner[low]]);
        }
    }

    PersistenceDiagram d0{0, {}}, d1{1, {}};
    for (int i = 0; i < m; ++i) {
        const auto& s = simplices[i];
        if (s.dim > 1) continue;
        const bool positive = column[i].empty();
        if (!positive) continue;
        double death = killed_by[i] >= 0 ? simplices[killed_by[i]].diam : kInf;
        if (death <= s.diam) continue;  // zero-length
        (s.dim == 0 ? d0 : d1).pairs.push_back({s.diam, death, false});
    }
    std::sort(d0.pairs.begin(), d0.pairs.end());
    std::sort(d1.pairs.begin(), d1.pairs.end());
    return {std::move(d0), std::move(d1)};
}

std::vector<double> mst_lengths(const PointCloud& cloud) {
    const int n = static_cast<int>(cloud.size());
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, kInf);
    std::vector<double> lengths;
    in_tree[0] = 1;
    for (int j = 1; j < n; ++j) best[j] = euclidean(cloud.point(0), cloud.point(j));
    for (int round = 1; round < n; ++round) {
        int pick = -1;
        for (int j = 0; j < n; ++j)
            if (!in_tree[j] && (pick == -1 || best[j] < best[pick])) pick = j;
        lengths.push_back(best[pick]);
        in_tree[pick] = 1;
        for (int j = 0; j < n; ++j)
            if (!in_tree[j]) best[j] = std::min(best[j], euclidean(cloud.point(pick), cloud.point(j)));
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

namespace {

double pp_cost(const Bar& x, const Bar& y, int p, QNorm q) {
    const double db = std::abs(x.birth - y.birth);
    const double dd = std::abs(x.death - y.death);
    const double base = q == QNorm::Inf ? std::max(db, dd) : std::sqrt(db * db + dd * dd);
    return p == 1 ? base : base * base;
}

double dg_cost(const Bar& x, int p, QNorm q) {
    const double base =
        q == QNorm::Inf ? (x.death - x.birth) / 2.0 : (x.death - x.birth) / std::sqrt(2.0);
    return p == 1 ? base : base * base;
}

void enumerate(const std::vector<Bar>& a, const std::vector<Bar>& b, size_t i,
               std::vector<char>& used, double cost, int p, QNorm q, double& best) {
    if (cost >= best) return;
    if (i == a.size()) {
        double total = cost;
        for (size_t j = 0; j < b.size(); ++j)
            if (!used[j]) total += dg_cost(b[j], p, q);
        best = std::min(best, total);
        return;
    }
    enumerate(a, b, i + 1, used, cost + dg_cost(a[i], p, q), p, q, best);
    for (size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        enumerate(a, b, i + 1, used, cost + pp_cost(a[i], b[j], p, q), p, q, best);
        used[j] = 0;
    }
}

}  // namespace

double brute_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int p,
                         QNorm q) {
    double best = kInf;
    std::vector<char> used(d2.size(), 0);
    enumerate(d1.pairs, d2.pairs, 0, used, 0.0, p, q, best);
    return p == 1 ? best : std::sqrt(best);
}

namespace {

bool try_augment(int u, const std::vector<std::vector<int>>& allowed, std::vector<int>& match_left,
                 std::vector<int>& match_right, std::vector<char>& visited) {
    for (int v : allowed[u]) {
        if (visited[v]) continue;
        visited[v] = 1;
        if (match_right[v] == -1 ||
            try_augment(match_right[v], allowed, match_left, match_right, visited)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

bool feasible(const std::vector<Bar>& a, const std::vector<Bar>& b, double c) {
    const int n1 = static_cast<int>(a.size());
    const int n2 = static_cast<int>(b.size());
    const int n = n1 + n2;
    std::vector<std::vector<int>> allowed(n);
    const double eps = 1e-12;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j)
            if (pp_cost(a[i], b[j], 1, QNorm::Inf) <= c + eps) allowed[i].push_back(j);
        if (dg_cost(a[i], 1, QNorm::Inf) <= c + eps)
            for (int j = n2; j < n; ++j) allowed[i].push_back(j);
    }
    for (int i = n1; i < n; ++i) {
        for (int j = 0; j < n2; ++j)
            if (dg_cost(b[j], 1, QNorm::Inf) <= c + eps) allowed[i].push_back(j);
        for (int j = n2; j < n; ++j) allowed[i].push_back(j);
    }
    std::vector<int> match_left(n, -1), match_right(n, -1);
    for (int u = 0; u < n; ++u) {
        std::vector<char> visited(n, 0);
        if (!try_augment(u, allowed, match_left, match_right, visited)) return false;
    }
    return true;
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    std::vector<Bar> fin1, fin2;
    std::vector<double> inf1, inf2;
    for (const auto& bar : d1.pairs) {
        if (std::isinf(bar.death)) {
            inf1.push_back(bar.birth);
        } else {
            fin1.push_back(bar);
        }
    }
    for (const auto& bar : d2.pairs) {
        if (std::isinf(bar.death)) {
            inf2.push_back(bar.birth);
        } else {
            fin2.push_back(bar);
        }
    }
    if (inf1.size() != inf2.size()) return kInf;
    std::sort(inf1.begin(), inf1.end());
    std::sort(inf2.begin(), inf2.end());
    double essential = 0.0;
    for (size_t i = 0; i < inf1.size(); ++i)
        essential = std::max(essential, std::abs(inf1[i] - inf2[i]));

    std::vector<double> candidates = {0.0};
    for (const auto& x : fin1) {
        candidates.push_back(dg_cost(x, 1, QNorm::Inf));
        for (const auto& y : fin2) candidates.push_back(pp_cost(x, y, 1, QNorm::Inf));
    }
    for (const auto& y : fin2) candidates.push_back(dg_cost(y, 1, QNorm::Inf));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        if (feasible(fin1, fin2, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return std::max(candidates[lo], essential);
}

std::pair<std::vector<double>, std::vector<std::vector<double>>> jacobi_eigs(
    std::vector<std::vector<double>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return m[a][a] > m[b][b]; });
    std::vector<double> values(n);
    std::vector<std::vector<double>> vectors(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r) {
        values[r] = m[order[r]][order[r]];
        for (int k = 0; k < n; ++k) vectors[r][k] = v[k][order[r]];
    }
    return {values, vectors};
}

}  // namespace ntopo::oracle
