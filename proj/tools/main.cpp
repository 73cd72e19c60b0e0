#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ntopo/common.hpp"
#include "ntopo/pipeline.hpp"
#include "ntopo/version.hpp"

namespace {

using ntopo::ConfigMap;

struct CommonArgs {
    std::string config_file;
    std::map<std::string, std::string> overrides;
};

void add_config_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_file, "key = value config file");
    for (const auto& key : ntopo::config_keys())
        cmd->add_option_function<std::string>(
            std::string("--") + key.name,
            [&args, name = std::string(key.name)](const std::string& v) { args.overrides[name] = v; },
            key.help);
}

ConfigMap resolve(const CommonArgs& args) {
    ConfigMap map;
    if (!args.config_file.empty()) map = ConfigMap::from_file(args.config_file);
    for (const auto& [k, v] : args.overrides) map.set(k, v);
    if (!map.has("corpus.api_key")) {
        if (const char* env = std::getenv("NEWS_API_KEY")) map.set("corpus.api_key", env);
    }
    return map;
}

int run_guarded(const std::function<void(const ConfigMap&)>& body, const CommonArgs& args) {
    try {
        body(resolve(args));
        return 0;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        // config/file validation problems exit 1, runtime failures exit 2
        const std::string what = err.what();
        if (what.rfind("config:", 0) == 0 || what.find("cannot open") != std::string::npos) {
            std::cerr << "error: " << what << "\n";
            return 1;
        }
        std::cerr << "error: " << what << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"narrative-topology: topological change detection over dated text corpora"};
    app.set_version_flag("--version", ntopo::kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    std::string stage_for;
    int exit_code = 0;

    auto add_stage_cmd = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_config_options(cmd, args);
        cmd->callback([&, name] {
            exit_code = run_guarded(
                [&](const ConfigMap& map) {
                    ntopo::run_pipeline_until(ntopo::RunConfig::from_map(map), name);
                },
                args);
        });
    };

    add_stage_cmd("ingest", "parse or fetch the corpus and extract daily phrases");
    add_stage_cmd("graphs", "build daily graphs, windowed unions, and the flattened graph");
    add_stage_cmd("embed", "train node embeddings and emit per-window edge clouds");
    add_stage_cmd("reduce", "project window clouds to 2-D");
    add_stage_cmd("tda", "compute Rips persistence diagrams per window");

    {
        CLI::App* cmd = app.add_subcommand("analyze", "build signals, lag reports, and the change report");
        add_config_options(cmd, args);
        cmd->callback([&] {
            exit_code = run_guarded(
                [&](const ConfigMap& map) {
                    auto cfg = ntopo::RunConfig::from_map(map);
                    auto report = ntopo::run_pipeline(cfg);
                    ntopo::emit_plots(report, cfg.output_dir, cfg.event_date);
                    std::cout << "peak lag (entropy H0 vs H1): " << report.entropy_lag.peak_lag
                              << " corr " << ntopo::fmt_double_short(report.entropy_lag.peak_corr)
                              << "\n"
                              << "peak lag (wasserstein H0 vs H1): "
                              << report.wasserstein_lag.peak_lag << " corr "
                              << ntopo::fmt_double_short(report.wasserstein_lag.peak_corr) << "\n";
                },
                args);
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("run", "execute the full pipeline and write the report");
        add_config_options(cmd, args);
        cmd->callback([&] {
            exit_code = run_guarded(
                [&](const ConfigMap& map) {
                    auto cfg = ntopo::RunConfig::from_map(map);
                    auto report = ntopo::run_pipeline(cfg);
                    auto plots = ntopo::emit_plots(report, cfg.output_dir, cfg.event_date);
                    std::cout << "report: " << cfg.output_dir << "/report.json\n"
                              << "signals: " << cfg.output_dir << "/signals.csv\n"
                              << "plots: " << plots.size() << " files\n";
                    if (!report.combined_candidates.empty())
                        std::cout << "top candidate window: " << report.combined_candidates[0].window
                                  << "\n";
                },
                args);
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("fetch", "download articles into the cache and corpus file");
        add_config_options(cmd, args);
        std::string out_path = "corpus.jsonl";
        cmd->add_option("--out", out_path, "corpus file to write");
        cmd->callback([&] {
            exit_code = run_guarded(
                [&](const ConfigMap& map) {
                    auto cfg = ntopo::RunConfig::from_map(map);
                    if (cfg.query.empty() || !cfg.from || !cfg.to)
                        throw std::invalid_argument("fetch needs corpus.query, corpus.from, corpus.to");
                    ntopo::FetchConfig fc;
                    fc.query = cfg.query;
                    fc.from = *cfg.from;
                    fc.to = *cfg.to;
                    fc.sources = cfg.sources;
                    fc.api_key = cfg.api_key;
                    fc.cache_dir = cfg.cache_dir.empty() ? "news_cache" : cfg.cache_dir;
                    fc.base_url = cfg.base_url;
                    auto docs = ntopo::fetch_articles(fc);
                    ntopo::write_corpus(docs, out_path);
                    std::cout << "fetched " << docs.size() << " documents -> " << out_path << "\n";
                },
                args);
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("synth", "generate a synthetic two-regime corpus");
        add_config_options(cmd, args);
        std::string out_path = "synthetic.jsonl";
        cmd->add_option("--out", out_path, "corpus file to write");
        cmd->callback([&] {
            exit_code = run_guarded(
                [&](const ConfigMap& map) {
                    auto docs = ntopo::make_synthetic_corpus(ntopo::SynthConfig::from_map(map));
                    ntopo::write_corpus(docs, out_path);
                    std::cout << "wrote " << docs.size() << " documents -> " << out_path << "\n";
                },
                args);
        });
    }

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
