#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntopo/config.hpp"
#include "ntopo/fetch.hpp"
#include "ntopo/metrics.hpp"
#include "ntopo/reduce.hpp"

namespace ntopo {

struct RunConfig {
    // corpus source: a file, or fetch parameters when the path is empty
    std::string corpus_path;
    std::string query;
    std::optional<Date> from;
    std::optional<Date> to;
    std::vector<std::string> sources;
    std::string api_key;
    std::string cache_dir;
    std::string base_url = "https://newsapi.org";

    int window = 3;
    int stride = 1;

    SkipgramConfig skipgram;
    int walks_train = 100000;
    int walks_infer = 4000;
    int walk_length = 40;
    bool per_window_walks = false;

    ReduceConfig reduce;
    RipsConfig rips;
    SignalConfig metrics;
    int max_lag = 0;  // 0 = floor(series length / 3)

    uint64_t seed = 42;
    std::string output_dir = "out";
    std::optional<Date> event_date;
    int threads = 0;  // 0 = hardware concurrency

    static RunConfig from_map(const ConfigMap& map);
};

std::string config_hash(const RunConfig& cfg);

struct SynthConfig {
    int days = 60;
    int change_day = 30;
    int vocab_size = 40;
    double overlap = 0.2;
    int docs_per_day = 3;
    int phrases_per_doc = 12;
    int phrase_min = 2;
    int phrase_max = 3;
    Date start_date{2024, 1, 1};
    uint64_t seed = 1;

    static SynthConfig from_map(const ConfigMap& map);
};

// Two vocabulary pools sharing `overlap` of their words; days before
// change_day draw phrases from pool A, days from change_day on from pool
// B. Deterministic for a fixed seed.
std::vector<Document> make_synthetic_corpus(const SynthConfig& cfg);

struct WindowInfo {
    int index = 0;
    std::string start_date;
    std::string end_date;
};

struct Candidate {
    int window = 0;
    double score = 0.0;
};

struct ChangeReport {
    SignalSet signals;
    LagReport entropy_lag;      // H0 entropy vs H1 entropy (smoothed)
    LagReport wasserstein_lag;  // H0 vs H1 normalized Wasserstein (smoothed)
    std::vector<WindowInfo> windows;
    // candidate change windows ranked by |d1| of each smoothed signal,
    // plus a rank-sum combination
    std::map<std::string, std::vector<Candidate>> per_signal_candidates;
    std::vector<Candidate> combined_candidates;
    std::string config_hash;
    uint64_t seed = 0;
    std::string version;
};

// corpus -> graphs -> embedding -> clouds -> 2-D -> diagrams -> signals.
// Every stage writes its artifacts under cfg.output_dir and is reused on
// rerun while its config hash matches. Deterministic end to end for a
// fixed seed.
ChangeReport run_pipeline(const RunConfig& cfg);

// Runs the pipeline only up to the named stage ("ingest", "graphs",
// "embed", "reduce", "tda", "analyze").
void run_pipeline_until(const RunConfig& cfg, const std::string& stage);

std::string report_json(const ChangeReport& report);

// One chart per signal (trace/d1/d2 panels) and one per lag report; the
// event date, when set, draws a vertical marker. Returns written paths.
std::vector<std::string> emit_plots(const ChangeReport& report, const std::string& output_dir,
                                    const std::optional<Date>& event_date);

}  // namespace ntopo
