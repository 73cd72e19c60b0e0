#include "ntopo/fetch.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifdef NTOPO_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <json.hpp>

#include "ntopo/common.hpp"

namespace ntopo {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string url_encode(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

// Fetches one (day, source) response body, from cache when present.
// Returns empty optional when the request ultimately failed.
std::optional<std::string> get_day_source(const FetchConfig& cfg, const fs::path& cache_path,
                                          const std::string& day, const std::string& source) {
    if (fs::exists(cache_path)) {
        std::ifstream in(cache_path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    httplib::Client client(cfg.base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    const std::string path = "/v2/everything?q=" + url_encode(cfg.query) + "&from=" + day +
                             "&to=" + day + "&sources=" + url_encode(source) +
                             "&pageSize=" + std::to_string(cfg.page_size) +
                             "&apiKey=" + url_encode(cfg.api_key);

    int backoff = cfg.backoff_ms;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
        auto res = client.Get(path);
        if (!res) continue;
        if (res->status == 429) continue;  // rate limited, back off
        if (res->status != 200) {
            warn("fetch: " + source + " " + day + ": HTTP " + std::to_string(res->status));
            return std::nullopt;
        }
        fs::create_directories(cache_path.parent_path());
        std::ofstream out(cache_path, std::ios::binary);
        out << res->body;
        return res->body;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Document> fetch_articles(const FetchConfig& cfg) {
    if (cfg.from > cfg.to) throw std::invalid_argument("fetch_articles: from > to");
    if (cfg.api_key.empty()) throw std::invalid_argument("fetch_articles: api_key is empty");
    if (cfg.cache_dir.empty()) throw std::invalid_argument("fetch_articles: cache_dir is empty");

    const std::string query_hash = hex64(fnv1a64(cfg.query));
    std::vector<Document> docs;
    std::set<std::pair<std::string, std::string>> seen;  // (source, title)

    for (long d = days_from_civil(cfg.from); d <= days_from_civil(cfg.to); ++d) {
        const std::string day = to_string(civil_from_days(d));
        bool day_ok = false;
        for (const auto& source : cfg.sources) {
            const fs::path cache_path = fs::path(cfg.cache_dir) / query_hash / day / (source + ".json");
            auto body = get_day_source(cfg, cache_path, day, source);
            if (!body) continue;
            day_ok = true;

            json resp = json::parse(*body, nullptr, false);
            if (resp.is_discarded() || !resp.contains("articles") || !resp["articles"].is_array()) {
                warn("fetch: " + source + " " + day + ": unexpected response shape");
                continue;
            }
            for (const auto& art : resp["articles"]) {
                std::string title = art.value("title", "");
                std::string src = source;
                if (art.contains("source") && art["source"].is_object())
                    src = art["source"].value("name", source);
                std::string text = art.value("content", "");
                if (text.empty()) text = art.value("description", "");
                std::optional<Date> date;
                if (art.contains("publishedAt") && art["publishedAt"].is_string()) {
                    const std::string& ts = art["publishedAt"].get_ref<const std::string&>();
                    if (ts.size() >= 10) date = parse_date(ts.substr(0, 10));
                }
                if (!date) date = parse_date(day);
                if (title.empty() || text.empty() || !date) continue;
                if (*date < cfg.from || cfg.to < *date) continue;
                if (!seen.emplace(src, title).second) continue;
                docs.push_back(Document{*date, std::move(src), std::move(title), std::move(text)});
            }
        }
        if (!day_ok && !cfg.sources.empty()) warn("fetch: no usable responses for " + day + "; day skipped");
    }
    return docs;
}

}  // namespace ntopo
