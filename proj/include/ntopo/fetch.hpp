#pragma once

#include <string>
#include <vector>

#include "ntopo/corpus.hpp"

namespace ntopo {

struct FetchConfig {
    std::string query;
    Date from;
    Date to;
    std::vector<std::string> sources;
    std::string api_key;
    std::string cache_dir;
    std::string base_url = "https://newsapi.org";  // "everything"-compatible endpoint
    int page_size = 100;
    int max_retries = 3;
    int backoff_ms = 500;  // doubles per retry
};

// One GET per (day, source) against <base_url>/v2/everything. Raw response
// bytes are cached at <cache_dir>/<query-hash>/<YYYY-MM-DD>/<source>.json,
// so a warm cache answers without the network. Documents are deduplicated
// on (source, title). HTTP failure after the retry budget warns and skips
// that day/source; rate-limit responses back off exponentially.
std::vector<Document> fetch_articles(const FetchConfig& cfg);

}  // namespace ntopo
