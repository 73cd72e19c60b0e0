#include "ntopo/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ntopo/common.hpp"
#include "ntopo/graph.hpp"
#include "ntopo/svg.hpp"
#include "ntopo/tda.hpp"
#include "ntopo/version.hpp"

namespace ntopo {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------- config

RunConfig RunConfig::from_map(const ConfigMap& map) {
    for (const auto& [key, value] : map.values()) {
        bool known = false;
        for (const auto& k : config_keys())
            if (key == k.name) {
                known = true;
                break;
            }
        if (!known) throw std::runtime_error("config: unknown key: " + key);
    }

    RunConfig cfg;
    cfg.corpus_path = map.get("corpus.path", "");
    cfg.query = map.get("corpus.query", "");
    if (map.has("corpus.from")) {
        cfg.from = parse_date(map.get("corpus.from", ""));
        if (!cfg.from) throw std::runtime_error("config: corpus.from is not a date");
    }
    if (map.has("corpus.to")) {
        cfg.to = parse_date(map.get("corpus.to", ""));
        if (!cfg.to) throw std::runtime_error("config: corpus.to is not a date");
    }
    for (auto& s : split(map.get("corpus.sources", ""), ','))
        if (!trim(s).empty()) cfg.sources.emplace_back(trim(s));
    cfg.api_key = map.get("corpus.api_key", "");
    cfg.cache_dir = map.get("corpus.cache_dir", "");
    cfg.base_url = map.get("corpus.base_url", cfg.base_url);

    cfg.window = static_cast<int>(map.get_int("graph.window", 3));
    cfg.stride = static_cast<int>(map.get_int("graph.stride", 1));

    cfg.skipgram.dims = static_cast<int>(map.get_int("embed.dims", 64));
    cfg.skipgram.context = static_cast<int>(map.get_int("embed.context", 3));
    cfg.skipgram.epochs = static_cast<int>(map.get_int("embed.epochs", 10));
    cfg.skipgram.negatives = static_cast<int>(map.get_int("embed.negatives", 5));
    cfg.skipgram.lr = map.get_double("embed.lr", 0.025);
    cfg.walks_train = static_cast<int>(map.get_int("embed.walks_train", 100000));
    cfg.walks_infer = static_cast<int>(map.get_int("embed.walks_infer", 4000));
    cfg.walk_length = static_cast<int>(map.get_int("embed.walk_length", 40));
    cfg.per_window_walks = map.get_bool("embed.per_window_walks", false);

    const std::string method = map.get("reduce.method", "MANIFOLD");
    if (method == "MANIFOLD") {
        cfg.reduce.method = ReduceMethod::Manifold;
    } else if (method == "PCA") {
        cfg.reduce.method = ReduceMethod::Pca;
    } else {
        throw std::runtime_error("config: reduce.method must be MANIFOLD or PCA");
    }
    cfg.reduce.n_neighbors = static_cast<int>(map.get_int("reduce.n_neighbors", 15));
    cfg.reduce.min_dist = map.get_double("reduce.min_dist", 0.1);
    cfg.reduce.n_epochs = static_cast<int>(map.get_int("reduce.n_epochs", 200));

    cfg.rips.max_dim = static_cast<int>(map.get_int("tda.max_dim", 1));
    const std::string mel = map.get("tda.max_edge_length", "auto");
    cfg.rips.max_edge_length = mel == "auto" ? kInf : std::stod(mel);

    cfg.metrics.p = static_cast<int>(map.get_int("metrics.p", 1));
    const std::string q = map.get("metrics.q", "inf");
    if (q == "inf") {
        cfg.metrics.q = QNorm::Inf;
    } else if (q == "2") {
        cfg.metrics.q = QNorm::Two;
    } else {
        throw std::runtime_error("config: metrics.q must be 2 or inf");
    }
    cfg.metrics.smooth_window = static_cast<int>(map.get_int("metrics.smooth_window", 7));
    cfg.max_lag = static_cast<int>(map.get_int("metrics.max_lag", 0));
    const std::string policy = map.get("metrics.infinite_policy", "drop");
    if (policy == "drop") {
        cfg.metrics.infinite_policy = {InfinitePolicy::Drop, 0.0};
    } else if (policy.rfind("clamp:", 0) == 0) {
        cfg.metrics.infinite_policy = {InfinitePolicy::Clamp, std::stod(policy.substr(6))};
    } else {
        throw std::runtime_error("config: metrics.infinite_policy must be drop or clamp:<value>");
    }

    cfg.seed = static_cast<uint64_t>(map.get_int("pipeline.seed", 42));
    cfg.output_dir = map.get("pipeline.output_dir", "out");
    if (map.has("pipeline.event_date")) {
        cfg.event_date = parse_date(map.get("pipeline.event_date", ""));
        if (!cfg.event_date) throw std::runtime_error("config: pipeline.event_date is not a date");
    }
    cfg.threads = static_cast<int>(map.get_int("pipeline.threads", 0));

    cfg.skipgram.seed = mix_seed(cfg.seed, 2);
    cfg.reduce.seed = mix_seed(cfg.seed, 3);
    return cfg;
}

SynthConfig SynthConfig::from_map(const ConfigMap& map) {
    SynthConfig cfg;
    cfg.days = static_cast<int>(map.get_int("synth.days", cfg.days));
    cfg.change_day = static_cast<int>(map.get_int("synth.change_day", cfg.change_day));
    cfg.vocab_size = static_cast<int>(map.get_int("synth.vocab_size", cfg.vocab_size));
    cfg.overlap = map.get_double("synth.overlap", cfg.overlap);
    cfg.docs_per_day = static_cast<int>(map.get_int("synth.docs_per_day", cfg.docs_per_day));
    cfg.phrases_per_doc = static_cast<int>(map.get_int("synth.phrases_per_doc", cfg.phrases_per_doc));
    cfg.phrase_min = static_cast<int>(map.get_int("synth.phrase_min", cfg.phrase_min));
    cfg.phrase_max = static_cast<int>(map.get_int("synth.phrase_max", cfg.phrase_max));
    if (map.has("synth.start_date")) {
        auto d = parse_date(map.get("synth.start_date", ""));
        if (!d) throw std::runtime_error("config: synth.start_date is not a date");
        cfg.start_date = *d;
    }
    cfg.seed = static_cast<uint64_t>(map.get_int("pipeline.seed", 1));
    return cfg;
}

namespace {

std::string canonical_config(const RunConfig& c) {
    std::ostringstream s;
    s << "corpus.path=" << c.corpus_path << "\nquery=" << c.query
      << "\nfrom=" << (c.from ? to_string(*c.from) : "") << "\nto=" << (c.to ? to_string(*c.to) : "");
    s << "\nsources=";
    for (const auto& src : c.sources) s << src << ",";
    s << "\nbase_url=" << c.base_url << "\nw=" << c.window << "\ns=" << c.stride
      << "\ndims=" << c.skipgram.dims << "\ncontext=" << c.skipgram.context
      << "\nepochs=" << c.skipgram.epochs << "\nnegatives=" << c.skipgram.negatives
      << "\nlr=" << fmt_double(c.skipgram.lr) << "\nwalks_train=" << c.walks_train
      << "\nwalks_infer=" << c.walks_infer << "\nwalk_length=" << c.walk_length
      << "\nper_window_walks=" << c.per_window_walks
      << "\nreduce.method=" << (c.reduce.method == ReduceMethod::Manifold ? "MANIFOLD" : "PCA")
      << "\nreduce.k=" << c.reduce.n_neighbors << "\nreduce.min_dist=" << fmt_double(c.reduce.min_dist)
      << "\nreduce.epochs=" << c.reduce.n_epochs << "\ntda.max_dim=" << c.rips.max_dim
      << "\ntda.max_edge_length=" << fmt_double(c.rips.max_edge_length)
      << "\nmetrics.p=" << c.metrics.p << "\nmetrics.q=" << (c.metrics.q == QNorm::Inf ? "inf" : "2")
      << "\nmetrics.smooth=" << c.metrics.smooth_window << "\nmetrics.max_lag=" << c.max_lag
      << "\npolicy=" << (c.metrics.infinite_policy.kind == InfinitePolicy::Drop
                             ? "drop"
                             : "clamp:" + fmt_double(c.metrics.infinite_policy.clamp_value))
      << "\nseed=" << c.seed << "\n";
    return s.str();
}

}  // namespace

std::string config_hash(const RunConfig& cfg) { return hex64(fnv1a64(canonical_config(cfg))); }

// ------------------------------------------------------- synthetic corpus

std::vector<Document> make_synthetic_corpus(const SynthConfig& cfg) {
    if (cfg.change_day <= 0 || cfg.change_day >= cfg.days)
        throw std::invalid_argument("make_synthetic_corpus: need 0 < change_day < days");
    if (cfg.vocab_size < cfg.phrase_max || cfg.phrase_min < 1 || cfg.phrase_max < cfg.phrase_min)
        throw std::invalid_argument("make_synthetic_corpus: bad vocabulary/phrase sizes");

    const int shared = static_cast<int>(std::floor(cfg.overlap * cfg.vocab_size));
    auto word = [](const char* prefix, int i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%s%03d", prefix, i);
        return std::string(buf);
    };
    std::vector<std::string> pool_a, pool_b;
    for (int i = 0; i < shared; ++i) {
        pool_a.push_back(word("common", i));
        pool_b.push_back(word("common", i));
    }
    for (int i = shared; i < cfg.vocab_size; ++i) {
        pool_a.push_back(word("alpha", i));
        pool_b.push_back(word("beta", i));
    }

    std::mt19937_64 rng(cfg.seed);
    std::vector<Document> docs;
    std::vector<int> pick;
    for (int day = 0; day < cfg.days; ++day) {
        const auto& pool = day < cfg.change_day ? pool_a : pool_b;
        const Date date = add_days(cfg.start_date, day);
        for (int doc = 0; doc < cfg.docs_per_day; ++doc) {
            std::string body;
            for (int ph = 0; ph < cfg.phrases_per_doc; ++ph) {
                const int len = cfg.phrase_min +
                                static_cast<int>(rng_below(
                                    rng, static_cast<uint64_t>(cfg.phrase_max - cfg.phrase_min + 1)));
                // sample distinct words for one phrase
                pick.clear();
                while (static_cast<int>(pick.size()) < len) {
                    const int w = static_cast<int>(rng_below(rng, pool.size()));
                    if (std::find(pick.begin(), pick.end(), w) == pick.end()) pick.push_back(w);
                }
                if (ph) body += " the ";  // stop-word separator keeps phrases apart
                for (size_t i = 0; i < pick.size(); ++i) {
                    if (i) body += ' ';
                    body += pool[pick[i]];
                }
            }
            docs.push_back(Document{date, "synthetic",
                                    "day " + std::to_string(day) + " doc " + std::to_string(doc),
                                    std::move(body)});
        }
    }
    return docs;
}

// ------------------------------------------------------------ stage cache

namespace {

struct Stamp {
    std::string hash;
    std::vector<std::string> files;  // relative to output dir
};

bool stamp_valid(const fs::path& dir, const std::string& stage, const std::string& hash) {
    std::ifstream in(dir / ("stage_" + stage + ".stamp"));
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != hash) return false;
    while (std::getline(in, line))
        if (!line.empty() && !fs::exists(dir / line)) return false;
    return true;
}

void write_stamp(const fs::path& dir, const std::string& stage, const Stamp& stamp) {
    std::ofstream out(dir / ("stage_" + stage + ".stamp"));
    out << stamp.hash << "\n";
    for (const auto& f : stamp.files) out << f << "\n";
}

std::string window_file(const char* dir, int index, const char* ext) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s/window_%04d%s", dir, index, ext);
    return buf;
}

uint64_t file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fnv1a64(ss.str());
}

// Runs fn(i) for each index over a small worker pool; each item is
// independent and internally single-threaded, so the schedule does not
// affect results.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

struct StageTimer {
    std::vector<std::pair<std::string, double>> timings;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    void record(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        timings.emplace_back(stage, std::chrono::duration<double>(now - mark).count());
        mark = now;
    }
};

// In-memory state threaded through the stages.
struct PipelineState {
    std::vector<std::string> dates;
    std::map<Date, std::vector<Phrase>> buckets;
    std::vector<WindowGraph> windows;  // pruned
    CooccurrenceGraph flat;
    NodeVectors vectors;
    std::vector<PointCloud> clouds;                  // aligned with windows
    std::vector<std::optional<PointCloud>> reduced;  // nullopt = window skipped
    std::vector<std::optional<std::pair<PersistenceDiagram, PersistenceDiagram>>> diagrams;
};

std::string serialize_buckets(const std::map<Date, std::vector<Phrase>>& buckets) {
    std::string out;
    for (const auto& [date, phrases] : buckets) {
        if (phrases.empty()) {
            out += to_string(date);
            out += "\t\n";
        }
        for (const auto& phrase : phrases) {
            out += to_string(date);
            out += '\t';
            for (size_t i = 0; i < phrase.size(); ++i) {
                if (i) out += ' ';
                out += phrase[i].lemma;
                out += ':';
                out += tag_name(phrase[i].tag);
            }
            out += '\n';
        }
    }
    return out;
}

std::map<Date, std::vector<Phrase>> load_buckets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::map<Date, std::vector<Phrase>> buckets;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("bad phrase line: " + line);
        auto date = parse_date(line.substr(0, tab));
        if (!date) throw std::runtime_error("bad date in phrase line: " + line);
        auto& day = buckets[*date];
        const std::string rest = line.substr(tab + 1);
        if (trim(rest).empty()) continue;  // empty-day marker
        Phrase phrase;
        for (const auto& tok : split(rest, ' ')) {
            const auto colon = tok.rfind(':');
            if (colon == std::string::npos) throw std::runtime_error("bad token in phrase line: " + line);
            PhraseToken pt;
            pt.lemma = tok.substr(0, colon);
            const std::string tag = tok.substr(colon + 1);
            pt.tag = tag == "ADJ" ? PosTag::Adj : PosTag::Noun;
            phrase.push_back(std::move(pt));
        }
        day.push_back(std::move(phrase));
    }
    return buckets;
}

}  // namespace

// --------------------------------------------------------------- pipeline

namespace {

class PipelineRun {
public:
    PipelineRun(const RunConfig& cfg) : cfg_(cfg), out_(cfg.output_dir) {
        fs::create_directories(out_);
        hash_["ingest"] = ingest_hash();
        hash_["graphs"] = chain(hash_["ingest"], "graphs|" + std::to_string(cfg_.window) + "|" +
                                                     std::to_string(cfg_.stride));
        hash_["embed"] = chain(hash_["graphs"],
                               "embed|" + std::to_string(cfg_.skipgram.dims) + "|" +
                                   std::to_string(cfg_.skipgram.context) + "|" +
                                   std::to_string(cfg_.skipgram.epochs) + "|" +
                                   std::to_string(cfg_.skipgram.negatives) + "|" +
                                   fmt_double(cfg_.skipgram.lr) + "|" + std::to_string(cfg_.walks_train) +
                                   "|" + std::to_string(cfg_.walk_length) + "|" +
                                   std::to_string(cfg_.seed));
        hash_["clouds"] = chain(hash_["embed"], "clouds|" + std::to_string(cfg_.per_window_walks) +
                                                    "|" + std::to_string(cfg_.walks_infer));
        hash_["reduce"] =
            chain(hash_["clouds"], "reduce|" +
                                       std::string(cfg_.reduce.method == ReduceMethod::Manifold
                                                       ? "MANIFOLD"
                                                       : "PCA") +
                                       "|" + std::to_string(cfg_.reduce.n_neighbors) + "|" +
                                       fmt_double(cfg_.reduce.min_dist) + "|" +
                                       std::to_string(cfg_.reduce.n_epochs));
        hash_["tda"] = chain(hash_["reduce"], "tda|" + std::to_string(cfg_.rips.max_dim) + "|" +
                                                  fmt_double(cfg_.rips.max_edge_length));
        hash_["analyze"] =
            chain(hash_["tda"], "analyze|" + std::to_string(cfg_.metrics.p) + "|" +
                                    std::string(cfg_.metrics.q == QNorm::Inf ? "inf" : "2") + "|" +
                                    std::to_string(cfg_.metrics.smooth_window) + "|" +
                                    std::to_string(cfg_.max_lag) + "|" +
                                    (cfg_.metrics.infinite_policy.kind == InfinitePolicy::Drop
                                         ? "drop"
                                         : "clamp:" + fmt_double(cfg_.metrics.infinite_policy.clamp_value)));
    }

    void run_until(const std::string& stage) {
        static const std::vector<std::string> order = {"ingest", "graphs", "embed",
                                                       "clouds", "reduce", "tda", "analyze"};
        std::string target = stage == "embed" ? "clouds" : stage;
        for (const auto& s : order) {
            run_stage(s);
            if (s == target) break;
        }
    }

    ChangeReport report() && { return std::move(report_); }
    const StageTimer& timer() const { return timer_; }

private:
    std::string ingest_hash() {
        std::string src;
        if (!cfg_.corpus_path.empty()) {
            src = "file|" + cfg_.corpus_path + "|" + hex64(file_hash(cfg_.corpus_path));
        } else {
            src = "fetch|" + cfg_.query + "|" + (cfg_.from ? to_string(*cfg_.from) : "") + "|" +
                  (cfg_.to ? to_string(*cfg_.to) : "") + "|";
            for (const auto& s : cfg_.sources) src += s + ",";
        }
        return hex64(fnv1a64(src));
    }

    static std::string chain(const std::string& upstream, const std::string& params) {
        return hex64(fnv1a64(upstream + "|" + params));
    }

    void run_stage(const std::string& stage) {
        const bool cached = stamp_valid(out_, stage, hash_[stage]);
        try {
            if (stage == "ingest") {
                cached ? load_ingest() : do_ingest();
            } else if (stage == "graphs") {
                cached ? load_graphs() : do_graphs();
            } else if (stage == "embed") {
                cached ? load_embed() : do_embed();
            } else if (stage == "clouds") {
                cached ? load_clouds() : do_clouds();
            } else if (stage == "reduce") {
                cached ? load_reduce() : do_reduce();
            } else if (stage == "tda") {
                cached ? load_tda() : do_tda();
            } else if (stage == "analyze") {
                // signals are cheap; recompute unless fully cached output exists
                do_analyze();
            }
        } catch (const std::exception& err) {
            throw std::runtime_error("stage " + stage + ": " + err.what());
        }
        timer_.record(stage + (cached ? " (cached)" : ""));
    }

    // ---- ingest

    void do_ingest() {
        std::vector<Document> docs;
        if (!cfg_.corpus_path.empty()) {
            docs = parse_corpus(cfg_.corpus_path).docs;
        } else if (!cfg_.query.empty()) {
            if (!cfg_.from || !cfg_.to)
                throw std::invalid_argument("fetch mode needs corpus.from and corpus.to");
            FetchConfig fc;
            fc.query = cfg_.query;
            fc.from = *cfg_.from;
            fc.to = *cfg_.to;
            fc.sources = cfg_.sources;
            fc.api_key = cfg_.api_key;
            fc.cache_dir = cfg_.cache_dir;
            fc.base_url = cfg_.base_url;
            docs = fetch_articles(fc);
        } else {
            throw std::invalid_argument("no corpus: set corpus.path or corpus.query");
        }
        state_.buckets = bucket_by_date(docs);
        std::ofstream out(out_ / "phrases.tsv");
        out << serialize_buckets(state_.buckets);
        out.close();
        write_stamp(out_, "ingest", {hash_["ingest"], {"phrases.tsv"}});
    }

    void load_ingest() { state_.buckets = load_buckets((out_ / "phrases.tsv").string()); }

    // ---- graphs

    void do_graphs() {
        std::vector<CooccurrenceGraph> daily;
        state_.dates.clear();
        for (const auto& [date, phrases] : state_.buckets) {
            daily.push_back(build_daily_graph(phrases));
            state_.dates.push_back(to_string(date));
        }
        state_.flat = flatten(daily);
        state_.windows = window_union(daily, state_.dates, cfg_.window, cfg_.stride);
        for (auto& win : state_.windows) win.graph = prune_degree_one(win.graph);

        fs::create_directories(out_ / "graphs");
        Stamp stamp{hash_["graphs"], {"graphs/flat.edges", "graphs/flat.nodes", "windows.tsv"}};
        write_graph(state_.flat, (out_ / "graphs" / "flat").string());
        std::ofstream windows_out(out_ / "windows.tsv");
        for (const auto& win : state_.windows) {
            windows_out << win.index << '\t' << win.start_date << '\t' << win.end_date << '\n';
            const std::string base = window_file("graphs", win.index, "");
            write_graph(win.graph, (out_ / base).string());
            stamp.files.push_back(base + ".edges");
            stamp.files.push_back(base + ".nodes");
        }
        windows_out.close();
        write_stamp(out_, "graphs", stamp);
    }

    void load_graphs() {
        state_.flat = read_graph((out_ / "graphs" / "flat").string());
        state_.windows.clear();
        state_.dates.clear();
        std::ifstream in(out_ / "windows.tsv");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto parts = split(line, '\t');
            if (parts.size() != 3) throw std::runtime_error("bad windows.tsv line: " + line);
            WindowGraph win;
            win.index = std::stoi(parts[0]);
            win.start_date = parts[1];
            win.end_date = parts[2];
            win.graph = read_graph((out_ / window_file("graphs", win.index, "")).string());
            state_.windows.push_back(std::move(win));
        }
    }

    // ---- embedding

    void do_embed() {
        const Walks walks =
            random_walks(state_.flat, cfg_.walks_train, cfg_.walk_length, mix_seed(cfg_.seed, 1));
        state_.vectors = train_skipgram(walks, cfg_.skipgram);
        write_vectors(to_cloud(state_.vectors), (out_ / "embedding.vec").string());
        write_stamp(out_, "embed", {hash_["embed"], {"embedding.vec"}});
    }

    void load_embed() {
        state_.vectors = to_node_vectors(read_vectors((out_ / "embedding.vec").string()));
    }

    // ---- per-window point clouds

    void do_clouds() {
        const int n = static_cast<int>(state_.windows.size());
        state_.clouds.assign(n, {});
        fs::create_directories(out_ / "clouds");
        Stamp stamp{hash_["clouds"], {}};
        for (int i = 0; i < n; ++i) {
            const auto& win = state_.windows[i];
            if (cfg_.per_window_walks) {
                // resample this window's edges with inference walks through
                // the frozen global vectors
                CooccurrenceGraph sampled;
                if (!win.graph.nodes.empty()) {
                    const Walks walks = random_walks(win.graph, cfg_.walks_infer, cfg_.walk_length,
                                                     mix_seed(cfg_.seed, 1000 + win.index));
                    for (const auto& path : walks.paths)
                        for (size_t s = 0; s + 1 < path.size(); ++s)
                            sampled.add_edge(walks.vocab[path[s]], walks.vocab[path[s + 1]]);
                }
                state_.clouds[i] = edge_vectors(sampled, state_.vectors);
            } else {
                state_.clouds[i] = edge_vectors(win.graph, state_.vectors);
            }
            const std::string rel = window_file("clouds", win.index, ".vec");
            write_vectors(state_.clouds[i], (out_ / rel).string());
            stamp.files.push_back(rel);
        }
        write_stamp(out_, "clouds", stamp);
    }

    void load_clouds() {
        state_.clouds.clear();
        for (const auto& win : state_.windows)
            state_.clouds.push_back(read_vectors((out_ / window_file("clouds", win.index, ".vec")).string()));
    }

    // ---- 2-D reduction

    void do_reduce() {
        const int n = static_cast<int>(state_.clouds.size());
        state_.reduced.assign(n, std::nullopt);
        fs::create_directories(out_ / "reduced");
        const size_t min_points =
            cfg_.reduce.method == ReduceMethod::Manifold ? cfg_.reduce.n_neighbors + 1 : 2;
        parallel_for(n, cfg_.threads, [&](int i) {
            const auto& cloud = state_.clouds[i];
            if (cloud.size() < min_points) {
                warn("reduce: window " + std::to_string(state_.windows[i].index) + " has " +
                     std::to_string(cloud.size()) + " points (< " + std::to_string(min_points) +
                     "); window skipped");
                return;
            }
            try {
                state_.reduced[i] = reduce_to_2d(cloud, cfg_.reduce);
            } catch (const std::exception& err) {
                throw std::runtime_error("window " + std::to_string(state_.windows[i].index) + ": " +
                                         err.what());
            }
        });
        Stamp stamp{hash_["reduce"], {}};
        for (int i = 0; i < n; ++i) {
            if (!state_.reduced[i]) continue;
            const std::string rel = window_file("reduced", state_.windows[i].index, ".vec");
            write_vectors(*state_.reduced[i], (out_ / rel).string());
            stamp.files.push_back(rel);
        }
        write_stamp(out_, "reduce", stamp);
    }

    void load_reduce() {
        state_.reduced.assign(state_.windows.size(), std::nullopt);
        for (size_t i = 0; i < state_.windows.size(); ++i) {
            const fs::path p = out_ / window_file("reduced", state_.windows[i].index, ".vec");
            if (fs::exists(p)) state_.reduced[i] = read_vectors(p.string());
        }
    }

    // ---- persistence

    void do_tda() {
        const int n = static_cast<int>(state_.reduced.size());
        state_.diagrams.assign(n, std::nullopt);
        fs::create_directories(out_ / "diagrams");
        parallel_for(n, cfg_.threads, [&](int i) {
            if (!state_.reduced[i]) return;
            try {
                state_.diagrams[i] = rips_persistence(*state_.reduced[i], cfg_.rips);
            } catch (const std::exception& err) {
                throw std::runtime_error("window " + std::to_string(state_.windows[i].index) + ": " +
                                         err.what());
            }
        });
        Stamp stamp{hash_["tda"], {}};
        for (int i = 0; i < n; ++i) {
            if (!state_.diagrams[i]) continue;
            const std::string rel = window_file("diagrams", state_.windows[i].index, ".dgm");
            write_diagram(state_.diagrams[i]->first, state_.diagrams[i]->second, (out_ / rel).string());
            stamp.files.push_back(rel);
        }
        write_stamp(out_, "tda", stamp);
    }

    void load_tda() {
        state_.diagrams.assign(state_.windows.size(), std::nullopt);
        for (size_t i = 0; i < state_.windows.size(); ++i) {
            const fs::path p = out_ / window_file("diagrams", state_.windows[i].index, ".dgm");
            if (fs::exists(p)) state_.diagrams[i] = read_diagram(p.string());
        }
    }

    // ---- signals, lags, candidates

    void do_analyze() {
        std::vector<std::pair<PersistenceDiagram, PersistenceDiagram>> diagrams;
        std::vector<int> indices;
        for (size_t i = 0; i < state_.diagrams.size(); ++i) {
            if (!state_.diagrams[i]) continue;
            diagrams.push_back(*state_.diagrams[i]);
            indices.push_back(state_.windows[i].index);
        }
        if (diagrams.size() < 4)
            throw std::invalid_argument("need >= 4 windows, have " + std::to_string(diagrams.size()));

        report_.signals = build_signals(diagrams, indices, cfg_.metrics);

        auto lag_for = [&](const std::vector<double>& a, const std::vector<double>& b) {
            const int max_lag =
                cfg_.max_lag > 0 ? cfg_.max_lag : std::max(1, static_cast<int>(a.size()) / 3);
            return cross_correlation(a, b, max_lag);
        };
        report_.entropy_lag =
            lag_for(report_.signals.h0_entropy.smoothed, report_.signals.h1_entropy.smoothed);
        report_.wasserstein_lag =
            lag_for(report_.signals.h0_wass.smoothed, report_.signals.h1_wass.smoothed);

        for (const auto& win : state_.windows)
            report_.windows.push_back({win.index, win.start_date, win.end_date});

        rank_candidates();
        report_.config_hash = config_hash(cfg_);
        report_.seed = cfg_.seed;
        report_.version = kVersion;

        std::ofstream csv(out_ / "signals.csv");
        csv << signals_csv(report_.signals);
        csv.close();
        std::ofstream lags(out_ / "lags.txt");
        lags << lag_report_text("h0_entropy vs h1_entropy", report_.entropy_lag) << "\n"
             << lag_report_text("h0_wass vs h1_wass", report_.wasserstein_lag);
        lags.close();
        std::ofstream rep(out_ / "report.json");
        rep << report_json(report_);
        rep.close();
        write_stamp(out_, "analyze", {hash_["analyze"], {"signals.csv", "lags.txt", "report.json"}});
    }

    void rank_candidates() {
        const std::map<std::string, const SignalSeries*> series = {
            {"h0_entropy", &report_.signals.h0_entropy},
            {"h1_entropy", &report_.signals.h1_entropy},
            {"h0_wass", &report_.signals.h0_wass},
            {"h1_wass", &report_.signals.h1_wass},
        };
        std::map<int, double> rank_score;  // window -> sum of (count - rank)
        std::map<int, int> seen;
        for (const auto& [name, s] : series) {
            std::vector<Candidate> ranked;
            for (size_t i = 0; i < s->size(); ++i)
                ranked.push_back({s->window_index[i], std::abs(s->d1[i])});
            std::sort(ranked.begin(), ranked.end(), [](const Candidate& a, const Candidate& b) {
                if (a.score != b.score) return a.score > b.score;
                return a.window < b.window;
            });
            for (size_t r = 0; r < ranked.size(); ++r) {
                rank_score[ranked[r].window] += static_cast<double>(ranked.size() - r);
                ++seen[ranked[r].window];
            }
            report_.per_signal_candidates[name] = std::move(ranked);
        }
        for (const auto& [window, score] : rank_score)
            if (seen[window] == static_cast<int>(series.size()))
                report_.combined_candidates.push_back({window, score});
        std::sort(report_.combined_candidates.begin(), report_.combined_candidates.end(),
                  [](const Candidate& a, const Candidate& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.window < b.window;
                  });
    }

    const RunConfig& cfg_;
    fs::path out_;
    std::map<std::string, std::string> hash_;
    PipelineState state_;
    ChangeReport report_;
    StageTimer timer_;
};

json series_json(const SignalSeries& s) {
    return json{{"window_index", s.window_index}, {"raw", s.raw},      {"smoothed", s.smoothed},
                {"d1", s.d1},                     {"d2", s.d2}};
}

json lag_json(const LagReport& r) {
    return json{{"lags", r.lags},
                {"correlations", r.correlations},
                {"peak_lag", r.peak_lag},
                {"peak_corr", r.peak_corr}};
}

json candidates_json(const std::vector<Candidate>& cands) {
    json arr = json::array();
    for (const auto& c : cands) arr.push_back(json{{"window", c.window}, {"score", c.score}});
    return arr;
}

}  // namespace

std::string report_json(const ChangeReport& report) {
    json doc;
    doc["meta"] = {{"config_hash", report.config_hash},
                   {"seed", report.seed},
                   {"version", report.version},
                   {"walk_starts", "round_robin"}};
    json wins = json::array();
    for (const auto& w : report.windows)
        wins.push_back(json{{"index", w.index}, {"start", w.start_date}, {"end", w.end_date}});
    doc["windows"] = wins;
    doc["signals"] = {{"h0_entropy", series_json(report.signals.h0_entropy)},
                      {"h1_entropy", series_json(report.signals.h1_entropy)},
                      {"h0_wass", series_json(report.signals.h0_wass)},
                      {"h1_wass", series_json(report.signals.h1_wass)}};
    doc["lag_reports"] = {{"entropy", lag_json(report.entropy_lag)},
                          {"wasserstein", lag_json(report.wasserstein_lag)}};
    json cands;
    for (const auto& [name, list] : report.per_signal_candidates) cands[name] = candidates_json(list);
    cands["combined"] = candidates_json(report.combined_candidates);
    doc["candidates"] = cands;
    return doc.dump(2) + "\n";
}

ChangeReport run_pipeline(const RunConfig& cfg) {
    PipelineRun run(cfg);
    run.run_until("analyze");

    std::ofstream meta(fs::path(cfg.output_dir) / "meta.txt");
    meta << "config_hash = " << config_hash(cfg) << "\n"
         << "seed = " << cfg.seed << "\n"
         << "version = " << kVersion << "\n"
         << "walk_starts = round_robin\n";
    for (const auto& [stage, secs] : run.timer().timings)
        meta << "time." << stage << " = " << fmt_double_short(secs) << "s\n";
    meta.close();

    return std::move(run).report();
}

void run_pipeline_until(const RunConfig& cfg, const std::string& stage) {
    PipelineRun run(cfg);
    run.run_until(stage);
}

std::vector<std::string> emit_plots(const ChangeReport& report, const std::string& output_dir,
                                    const std::optional<Date>& event_date) {
    const fs::path dir = fs::path(output_dir) / "plots";
    fs::create_directories(dir);
    if (!fs::exists(dir)) throw std::runtime_error("cannot create " + dir.string());

    std::optional<double> marker;
    if (event_date) {
        for (const auto& w : report.windows) {
            auto start = parse_date(w.start_date);
            auto end = parse_date(w.end_date);
            if (start && end && !(*event_date < *start) && !(*end < *event_date)) {
                marker = static_cast<double>(w.index);
                break;
            }
        }
    }

    std::vector<std::string> written;
    auto write_file = [&](const std::string& name, const std::string& body) {
        const fs::path p = dir / name;
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << body;
        written.push_back(p.string());
    };

    const std::pair<const char*, const SignalSeries*> signals[] = {
        {"h0_entropy", &report.signals.h0_entropy},
        {"h1_entropy", &report.signals.h1_entropy},
        {"h0_wass", &report.signals.h0_wass},
        {"h1_wass", &report.signals.h1_wass},
    };
    for (const auto& [name, s] : signals) {
        std::vector<double> x(s->window_index.begin(), s->window_index.end());
        SvgChart chart;
        chart.title = name;
        chart.x_label = "window";
        chart.marker_x = marker;
        chart.panels = {
            {"trace", {{"raw", "#999999", x, s->raw}, {"smoothed", "#1f77b4", x, s->smoothed}}},
            {"first derivative", {{"d1", "#2ca02c", x, s->d1}}},
            {"second derivative", {{"d2", "#d62728", x, s->d2}}},
        };
        write_file(std::string(name) + ".svg", render_svg(chart));
    }

    const std::pair<const char*, const LagReport*> lag_reports[] = {
        {"lag_entropy", &report.entropy_lag},
        {"lag_wasserstein", &report.wasserstein_lag},
    };
    for (const auto& [name, r] : lag_reports) {
        std::vector<double> x(r->lags.begin(), r->lags.end());
        SvgChart chart;
        chart.title = name;
        chart.x_label = "lag";
        chart.panels = {{"cross-correlation", {{"corr", "#1f77b4", x, r->correlations}}}};
        write_file(std::string(name) + ".svg", render_svg(chart));
    }
    return written;
}

}  // namespace ntopo
