#include "ntopo/config.hpp"

#include <fstream>
#include <stdexcept>

#include "ntopo/common.hpp"

namespace ntopo {

ConfigMap ConfigMap::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ConfigMap cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto body = trim(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        cfg.values_[std::string(trim(body.substr(0, eq)))] = std::string(trim(body.substr(eq + 1)));
    }
    return cfg;
}

std::string ConfigMap::get(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

long ConfigMap::get_int(const std::string& key, long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stol(it->second);
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " is not an integer: " + it->second);
    }
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " is not a number: " + it->second);
    }
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: " + key + " is not a boolean: " + v);
}

std::string ConfigMap::canonical() const {
    std::string out;
    for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
    return out;
}

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys = {
        {"corpus.path", "line-delimited JSON corpus file"},
        {"corpus.query", "news API query string (fetch mode)"},
        {"corpus.from", "fetch start date YYYY-MM-DD"},
        {"corpus.to", "fetch end date YYYY-MM-DD"},
        {"corpus.sources", "comma-separated source ids"},
        {"corpus.api_key", "news API key (or env NEWS_API_KEY)"},
        {"corpus.cache_dir", "HTTP response cache directory"},
        {"corpus.base_url", "news API base URL"},
        {"graph.window", "union window size w"},
        {"graph.stride", "window stride s"},
        {"embed.dims", "embedding dimensions"},
        {"embed.context", "skip-gram context window"},
        {"embed.epochs", "training epochs"},
        {"embed.negatives", "negative samples per pair"},
        {"embed.lr", "initial learning rate"},
        {"embed.walks_train", "training walk count"},
        {"embed.walks_infer", "per-window walk count (only with embed.per_window_walks)"},
        {"embed.walk_length", "walk length"},
        {"embed.per_window_walks", "resample each window's edges with inference walks"},
        {"reduce.method", "MANIFOLD or PCA"},
        {"reduce.n_neighbors", "manifold neighborhood size"},
        {"reduce.min_dist", "manifold minimum distance"},
        {"reduce.n_epochs", "layout optimizer epochs"},
        {"tda.max_dim", "top homology dimension (0 or 1)"},
        {"tda.max_edge_length", "filtration truncation; auto = enclosing radius"},
        {"metrics.p", "Wasserstein order p (1 or 2)"},
        {"metrics.q", "ground norm q (2 or inf)"},
        {"metrics.smooth_window", "moving-average window (odd)"},
        {"metrics.max_lag", "cross-correlation lag bound; 0 = floor(T/3)"},
        {"metrics.infinite_policy", "drop or clamp:<value>"},
        {"pipeline.seed", "master RNG seed"},
        {"pipeline.output_dir", "artifact/output directory"},
        {"pipeline.event_date", "optional event date for plot markers"},
        {"pipeline.threads", "worker threads for per-window stages (0 = auto)"},
        {"synth.days", "synthetic corpus length in days"},
        {"synth.change_day", "0-based day the vocabulary switches"},
        {"synth.vocab_size", "words per vocabulary pool"},
        {"synth.overlap", "fraction of vocabulary shared between pools"},
        {"synth.docs_per_day", "documents per day"},
        {"synth.phrases_per_doc", "phrases per document"},
        {"synth.phrase_min", "minimum words per phrase"},
        {"synth.phrase_max", "maximum words per phrase"},
        {"synth.start_date", "date of day 0"},
    };
    return keys;
}

}  // namespace ntopo
