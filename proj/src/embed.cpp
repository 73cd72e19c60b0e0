#include "ntopo/embed.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ntopo/common.hpp"

namespace ntopo {

std::vector<std::vector<std::string>> Walks::as_labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(paths.size());
    for (const auto& p : paths) {
        std::vector<std::string> walk;
        walk.reserve(p.size());
        for (uint32_t id : p) walk.push_back(vocab[id]);
        out.push_back(std::move(walk));
    }
    return out;
}

Walks random_walks(const CooccurrenceGraph& g, int n_walks, int walk_length, uint64_t seed) {
    if (g.nodes.empty()) throw std::invalid_argument("random_walks: empty graph");
    if (walk_length < 2) throw std::invalid_argument("random_walks: walk_length must be >= 2");
    if (n_walks < 1) throw std::invalid_argument("random_walks: n_walks must be >= 1");

    Walks walks;
    walks.vocab.assign(g.nodes.begin(), g.nodes.end());
    const size_t n = walks.vocab.size();

    std::map<std::string, uint32_t> id_of;
    for (uint32_t i = 0; i < n; ++i) id_of[walks.vocab[i]] = i;

    std::vector<std::vector<uint32_t>> adj(n);
    for (const auto& [e, c] : g.edge_counts) {
        uint32_t a = id_of[e.first], b = id_of[e.second];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    std::vector<uint32_t> starts(n);
    for (uint32_t i = 0; i < n; ++i) starts[i] = i;
    std::mt19937_64 master(seed);
    for (size_t i = n; i > 1; --i) std::swap(starts[i - 1], starts[rng_below(master, i)]);

    walks.paths.reserve(n_walks);
    for (int k = 0; k < n_walks; ++k) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<uint64_t>(k)));
        std::vector<uint32_t> path;
        path.reserve(walk_length);
        uint32_t cur = starts[k % n];
        path.push_back(cur);
        for (int step = 1; step < walk_length; ++step) {
            const auto& nb = adj[cur];
            if (nb.empty()) break;
            cur = nb[rng_below(rng, nb.size())];
            path.push_back(cur);
        }
        walks.paths.push_back(std::move(path));
    }
    return walks;
}

NodeVectors train_skipgram(const Walks& walks, const SkipgramConfig& cfg) {
    if (walks.paths.empty()) throw std::invalid_argument("train_skipgram: no walks");
    if (cfg.dims < 1 || cfg.context < 1) throw std::invalid_argument("train_skipgram: bad config");

    const size_t vocab_size = walks.vocab.size();
    const int d = cfg.dims;

    std::vector<int64_t> counts(vocab_size, 0);
    int64_t pair_total_per_epoch = 0;
    for (const auto& path : walks.paths) {
        const int len = static_cast<int>(path.size());
        for (int t = 0; t < len; ++t) {
            ++counts[path[t]];
            const int lo = std::max(0, t - cfg.context);
            const int hi = std::min(len - 1, t + cfg.context);
            pair_total_per_epoch += hi - lo;  // excludes the center itself
        }
    }

    // unigram^(3/4) cumulative table for negative sampling
    std::vector<double> noise_cdf(vocab_size);
    double acc = 0.0;
    for (size_t i = 0; i < vocab_size; ++i) {
        if (counts[i] > 0) acc += std::pow(static_cast<double>(counts[i]), 0.75);
        noise_cdf[i] = acc;
    }
    if (acc <= 0.0) throw std::invalid_argument("train_skipgram: empty corpus");
    for (auto& v : noise_cdf) v /= acc;

    std::mt19937_64 rng(cfg.seed);
    std::vector<double> syn0(vocab_size * d);
    std::vector<double> syn1(vocab_size * d, 0.0);
    for (auto& v : syn0) v = (rng_unit(rng) - 0.5) / d;

    auto sample_noise = [&]() -> uint32_t {
        double u = rng_unit(rng);
        auto it = std::lower_bound(noise_cdf.begin(), noise_cdf.end(), u);
        if (it == noise_cdf.end()) --it;
        return static_cast<uint32_t>(it - noise_cdf.begin());
    };

    const double total_updates =
        std::max<double>(1.0, static_cast<double>(pair_total_per_epoch) * cfg.epochs);
    const double lr_final = cfg.lr / 100.0;
    int64_t done = 0;
    std::vector<double> grad_center(d);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (const auto& path : walks.paths) {
            const int len = static_cast<int>(path.size());
            for (int t = 0; t < len; ++t) {
                const uint32_t center = path[t];
                double* vc = syn0.data() + static_cast<size_t>(center) * d;
                const int lo = std::max(0, t - cfg.context);
                const int hi = std::min(len - 1, t + cfg.context);
                for (int u = lo; u <= hi; ++u) {
                    if (u == t) continue;
                    const double lr = cfg.lr + (lr_final - cfg.lr) * (done / total_updates);
                    ++done;
                    const uint32_t target = path[u];
                    std::fill(grad_center.begin(), grad_center.end(), 0.0);
                    for (int k = 0; k <= cfg.negatives; ++k) {
                        uint32_t out;
                        double label;
                        if (k == 0) {
                            out = target;
                            label = 1.0;
                        } else {
                            out = sample_noise();
                            if (out == target) continue;
                            label = 0.0;
                        }
                        double* vo = syn1.data() + static_cast<size_t>(out) * d;
                        double dot = 0.0;
                        for (int j = 0; j < d; ++j) dot += vc[j] * vo[j];
                        const double f = 1.0 / (1.0 + std::exp(-dot));
                        const double g = (label - f) * lr;
                        for (int j = 0; j < d; ++j) {
                            grad_center[j] += g * vo[j];
                            vo[j] += g * vc[j];
                        }
                    }
                    for (int j = 0; j < d; ++j) vc[j] += grad_center[j];
                }
            }
        }
    }

    NodeVectors nv;
    nv.dims = d;
    for (size_t i = 0; i < vocab_size; ++i) {
        if (counts[i] == 0) continue;
        nv.table[walks.vocab[i]] =
            std::vector<double>(syn0.begin() + i * d, syn0.begin() + (i + 1) * d);
    }
    return nv;
}

PointCloud edge_vectors(const CooccurrenceGraph& g, const NodeVectors& nv) {
    PointCloud cloud;
    cloud.dims = nv.dims;
    for (const auto& [e, c] : g.edge_counts) {  // map order == label order
        auto ia = nv.table.find(e.first);
        auto ib = nv.table.find(e.second);
        if (ia == nv.table.end() || ib == nv.table.end()) {
            warn("edge_vectors: no vector for edge " + e.first + "|" + e.second + "; skipped");
            continue;
        }
        cloud.labels.push_back(e.first + "|" + e.second);
        for (int j = 0; j < nv.dims; ++j)
            cloud.data.push_back((ia->second[j] + ib->second[j]) / 2.0);
    }
    return cloud;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double dlt = a[i] - b[i];
        s += dlt * dlt;
    }
    return std::sqrt(s);
}

std::string dump_vectors(const PointCloud& cloud) {
    std::string out = "dims=" + std::to_string(cloud.dims) + "\n";
    for (size_t i = 0; i < cloud.size(); ++i) {
        out += cloud.labels[i];
        for (double v : cloud.point(i)) {
            out += ' ';
            out += fmt_double(v);
        }
        out += '\n';
    }
    return out;
}

void write_vectors(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_vectors(cloud);
}

PointCloud read_vectors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    PointCloud cloud;
    std::string line;
    if (!std::getline(in, line) || line.rfind("dims=", 0) != 0)
        throw std::runtime_error("bad vector file header in " + path);
    cloud.dims = std::stoi(line.substr(5));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string label;
        ls >> label;
        cloud.labels.push_back(label);
        double v;
        int got = 0;
        while (ls >> v) {
            cloud.data.push_back(v);
            ++got;
        }
        if (got != cloud.dims) throw std::runtime_error("bad vector line in " + path + ": " + line);
    }
    return cloud;
}

PointCloud to_cloud(const NodeVectors& nv) {
    PointCloud cloud;
    cloud.dims = nv.dims;
    for (const auto& [label, vec] : nv.table) {
        cloud.labels.push_back(label);
        cloud.data.insert(cloud.data.end(), vec.begin(), vec.end());
    }
    return cloud;
}

NodeVectors to_node_vectors(const PointCloud& cloud) {
    NodeVectors nv;
    nv.dims = cloud.dims;
    for (size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        nv.table[cloud.labels[i]] = std::vector<double>(p.begin(), p.end());
    }
    return nv;
}

}  // namespace ntopo
