#include "ntopo/graph.hpp"

#include <fstream>
#include <stdexcept>

#include "ntopo/common.hpp"

namespace ntopo {

void CooccurrenceGraph::add_edge(const std::string& a, const std::string& b, int64_t count) {
    if (a == b) return;  // no self-loops
    nodes.insert(a);
    nodes.insert(b);
    edge_counts[make_edge(a, b)] += count;
}

std::map<std::string, size_t> CooccurrenceGraph::degrees() const {
    std::map<std::string, size_t> deg;
    for (const auto& n : nodes) deg[n] = 0;
    for (const auto& [e, c] : edge_counts) {
        ++deg[e.first];
        ++deg[e.second];
    }
    return deg;
}

void CooccurrenceGraph::merge(const CooccurrenceGraph& other) {
    nodes.insert(other.nodes.begin(), other.nodes.end());
    for (const auto& [e, c] : other.edge_counts) edge_counts[e] += c;
}

CooccurrenceGraph build_daily_graph(const std::vector<Phrase>& phrases) {
    CooccurrenceGraph g;
    std::vector<std::string> distinct;
    for (const auto& phrase : phrases) {
        distinct.clear();
        for (const auto& tok : phrase) {
            bool seen = false;
            for (const auto& d : distinct)
                if (d == tok.lemma) {
                    seen = true;
                    break;
                }
            if (!seen) distinct.push_back(tok.lemma);
        }
        for (const auto& d : distinct) g.add_node(d);
        for (size_t i = 0; i < distinct.size(); ++i)
            for (size_t j = i + 1; j < distinct.size(); ++j) g.add_edge(distinct[i], distinct[j]);
    }
    return g;
}

std::vector<WindowGraph> window_union(std::span<const CooccurrenceGraph> daily,
                                      std::span<const std::string> dates, int w, int s) {
    if (w < 1 || s < 1) throw std::invalid_argument("window_union: w and s must be >= 1");
    std::vector<WindowGraph> windows;
    if (static_cast<int>(daily.size()) < w) {
        warn("window_union: fewer graphs (" + std::to_string(daily.size()) + ") than window size (" +
             std::to_string(w) + "); no windows produced");
        return windows;
    }
    const int count = (static_cast<int>(daily.size()) - w) / s + 1;
    for (int k = 1; k <= count; ++k) {
        const int start = (k - 1) * s;
        WindowGraph win;
        win.index = k;
        win.start_date = dates.empty() ? std::to_string(start) : dates[start];
        win.end_date = dates.empty() ? std::to_string(start + w - 1) : dates[start + w - 1];
        for (int t = start; t < start + w; ++t) win.graph.merge(daily[t]);
        windows.push_back(std::move(win));
    }
    return windows;
}

CooccurrenceGraph prune_degree_one(const CooccurrenceGraph& g) {
    const auto deg = g.degrees();
    CooccurrenceGraph out;
    for (const auto& [e, c] : g.edge_counts)
        if (deg.at(e.first) > 1 && deg.at(e.second) > 1) out.edge_counts[e] = c;
    for (const auto& [e, c] : out.edge_counts) {
        out.nodes.insert(e.first);
        out.nodes.insert(e.second);
    }
    return out;
}

CooccurrenceGraph flatten(std::span<const CooccurrenceGraph> daily) {
    CooccurrenceGraph flat;
    for (const auto& g : daily) flat.merge(g);
    return flat;
}

std::string dump_edges(const CooccurrenceGraph& g) {
    std::string out;
    for (const auto& [e, c] : g.edge_counts) {
        out += e.first;
        out += '\t';
        out += e.second;
        out += '\t';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

void write_graph(const CooccurrenceGraph& g, const std::string& path_base) {
    {
        std::ofstream out(path_base + ".edges");
        if (!out) throw std::runtime_error("cannot write " + path_base + ".edges");
        out << dump_edges(g);
    }
    std::ofstream nodes(path_base + ".nodes");
    if (!nodes) throw std::runtime_error("cannot write " + path_base + ".nodes");
    for (const auto& n : g.nodes) nodes << n << "\n";
}

CooccurrenceGraph read_graph(const std::string& path_base) {
    CooccurrenceGraph g;
    std::ifstream in(path_base + ".edges");
    if (!in) throw std::runtime_error("cannot read " + path_base + ".edges");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto parts = split(line, '\t');
        if (parts.size() != 3) throw std::runtime_error("bad edge line in " + path_base + ": " + line);
        g.add_edge(parts[0], parts[1], std::stoll(parts[2]));
    }
    std::ifstream nodes(path_base + ".nodes");
    if (nodes) {
        while (std::getline(nodes, line))
            if (!line.empty()) g.nodes.insert(line);
    }
    return g;
}

}  // namespace ntopo
