#include "ntopo/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ntopo/common.hpp"
#include "ntopo/lexicon_data.hpp"

namespace ntopo {

using nlohmann::json;

const char* tag_name(PosTag t) {
    switch (t) {
        case PosTag::Noun: return "NOUN";
        case PosTag::Adj: return "ADJ";
        case PosTag::Verb: return "VERB";
        case PosTag::Adv: return "ADV";
        default: return "OTHER";
    }
}

static PosTag tag_from_name(std::string_view s) {
    if (s == "NOUN") return PosTag::Noun;
    if (s == "ADJ") return PosTag::Adj;
    if (s == "VERB") return PosTag::Verb;
    if (s == "ADV") return PosTag::Adv;
    return PosTag::Other;
}

const std::unordered_set<std::string>& stopwords() {
    static const std::unordered_set<std::string> set = [] {
        std::unordered_set<std::string> s;
        std::istringstream in(data::kStopwords);
        std::string line;
        while (std::getline(in, line)) {
            auto w = trim(line);
            if (!w.empty()) s.emplace(w);
        }
        return s;
    }();
    return set;
}

LemmaLexicon LemmaLexicon::from_tsv(std::string_view tsv) {
    LemmaLexicon lex;
    std::istringstream in{std::string(tsv)};
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('\t');
        if (pos == std::string::npos) continue;
        lex.table_[line.substr(0, pos)] = std::string(trim(line.substr(pos + 1)));
    }
    return lex;
}

LemmaLexicon LemmaLexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lemma lexicon: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_tsv(ss.str());
}

const LemmaLexicon& LemmaLexicon::builtin() {
    static const LemmaLexicon lex = from_tsv(data::kLemmaLexicon);
    return lex;
}

const std::string* LemmaLexicon::find(const std::string& form) const {
    auto it = table_.find(form);
    return it == table_.end() ? nullptr : &it->second;
}

LexiconTagger LexiconTagger::from_tsv(std::string_view tsv) {
    LexiconTagger t;
    std::istringstream in{std::string(tsv)};
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('\t');
        if (pos == std::string::npos) continue;
        t.table_[line.substr(0, pos)] = tag_from_name(trim(line.substr(pos + 1)));
    }
    return t;
}

LexiconTagger LexiconTagger::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tagger lexicon: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_tsv(ss.str());
}

const LexiconTagger& LexiconTagger::builtin() {
    static const LexiconTagger t = from_tsv(data::kTaggerLexicon);
    return t;
}

static bool has_suffix(const std::string& w, std::string_view suf) {
    return w.size() > suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

PosTag LexiconTagger::tag(const std::string& token) const {
    auto it = table_.find(token);
    if (it != table_.end()) return it->second;
    for (const char* suf : {"ous", "ive", "al", "ful", "less", "ic"})
        if (has_suffix(token, suf)) return PosTag::Adj;
    return PosTag::Noun;
}

std::string lemmatize(const std::string& token, const LemmaLexicon& lexicon) {
    std::string t = lower_ascii(token);
    if (const std::string* hit = lexicon.find(t)) return *hit;
    // plural stripping only; -ing/-ed come from the lexicon
    if (t.size() >= 5 && has_suffix(t, "ies")) return t.substr(0, t.size() - 3) + "y";
    if (t.size() >= 5 &&
        (has_suffix(t, "sses") || has_suffix(t, "xes") || has_suffix(t, "zes") ||
         has_suffix(t, "ches") || has_suffix(t, "shes")))
        return t.substr(0, t.size() - 2);
    if (t.size() >= 4 && t.back() == 's' && !has_suffix(t, "ss") && !has_suffix(t, "us") &&
        !has_suffix(t, "is"))
        return t.substr(0, t.size() - 1);
    return t;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (c < 0x80) {
            if (std::isalnum(c)) {
                cur.push_back(c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : char(c));
            } else if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
            ++i;
        } else {
            // keep multi-byte codepoints as word characters
            size_t len = (c >= 0xF0) ? 4 : (c >= 0xE0) ? 3 : 2;
            len = std::min(len, text.size() - i);
            cur.append(text.substr(i, len));
            i += len;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<Phrase> extract_phrases(std::string_view text, const PosTagger& tagger,
                                    const LemmaLexicon& lexicon) {
    const auto& stop = stopwords();
    std::vector<Phrase> phrases;
    // Excluded tokens (short words, stop-words) act as chunk boundaries.
    std::vector<PhraseToken> run;
    bool in_noun_part = false;

    auto flush = [&] {
        // drop trailing adjectives so every phrase ends in a NOUN
        while (!run.empty() && run.back().tag == PosTag::Adj) run.pop_back();
        if (!run.empty()) phrases.push_back(run);
        run.clear();
        in_noun_part = false;
    };

    for (auto& tok : tokenize(text)) {
        if (tok.size() < 2 || stop.count(tok)) {
            flush();
            continue;
        }
        PosTag t = tagger.tag(tok);
        if (t == PosTag::Noun) {
            run.push_back({lemmatize(tok, lexicon), t});
            in_noun_part = true;
        } else if (t == PosTag::Adj) {
            if (in_noun_part) flush();  // ADJ after NOUN starts a new chunk
            run.push_back({lemmatize(tok, lexicon), t});
        } else {
            flush();
        }
    }
    flush();
    return phrases;
}

std::map<Date, std::vector<Phrase>> bucket_by_date(const std::vector<Document>& docs,
                                                   const PosTagger& tagger,
                                                   const LemmaLexicon& lexicon) {
    std::map<Date, std::vector<Phrase>> buckets;
    for (const auto& doc : docs) {
        auto& day = buckets[doc.date];
        auto phrases = extract_phrases(doc.body, tagger, lexicon);
        day.insert(day.end(), std::make_move_iterator(phrases.begin()),
                   std::make_move_iterator(phrases.end()));
    }
    return buckets;
}

static bool body_nonempty(const std::string& body) {
    for (unsigned char c : body)
        if (!std::isspace(c)) return true;
    return false;
}

ParsedCorpus parse_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    ParsedCorpus out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json rec = json::parse(line, nullptr, false);
        std::string why;
        if (rec.is_discarded()) {
            why = "not valid JSON";
        } else if (!rec.contains("date") || !rec["date"].is_string()) {
            why = "missing \"date\"";
        } else if (!rec.contains("source") || !rec["source"].is_string()) {
            why = "missing \"source\"";
        } else if (!rec.contains("title") || !rec["title"].is_string()) {
            why = "missing \"title\"";
        } else if (!rec.contains("body") || !rec["body"].is_string()) {
            why = "missing \"body\"";
        } else if (!parse_date(rec["date"].get<std::string>())) {
            why = "invalid date";
        } else if (!body_nonempty(rec["body"].get<std::string>())) {
            why = "empty body";
        }
        if (!why.empty()) {
            warn(path + ":" + std::to_string(lineno) + ": skipping record (" + why + ")");
            ++out.skipped;
            continue;
        }
        out.docs.push_back(Document{*parse_date(rec["date"].get<std::string>()),
                                    rec["source"].get<std::string>(),
                                    rec["title"].get<std::string>(),
                                    rec["body"].get<std::string>()});
    }
    return out;
}

void write_corpus(const std::vector<Document>& docs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path);
    for (const auto& d : docs) {
        json rec{{"date", to_string(d.date)}, {"source", d.source}, {"title", d.title}, {"body", d.body}};
        out << rec.dump() << "\n";
    }
}

}  // namespace ntopo
