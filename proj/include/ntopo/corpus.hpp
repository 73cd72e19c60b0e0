#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ntopo/dates.hpp"

namespace ntopo {

// One dated news article. `date` is validated ISO-8601, `body` non-empty
// after whitespace normalization.
struct Document {
    Date date;
    std::string source;
    std::string title;
    std::string body;
};

enum class PosTag { Noun, Adj, Verb, Adv, Other };

// A run of content tokens matching (ADJ)* (NOUN)+. Lemmas are lowercase.
struct PhraseToken {
    std::string lemma;
    PosTag tag;

    bool operator==(const PhraseToken&) const = default;
};
using Phrase = std::vector<PhraseToken>;

// form -> lemma table; lookup happens before the suffix rules.
class LemmaLexicon {
public:
    static const LemmaLexicon& builtin();
    static LemmaLexicon from_file(const std::string& path);
    static LemmaLexicon from_tsv(std::string_view tsv);

    const std::string* find(const std::string& form) const;
    size_t size() const { return table_.size(); }

private:
    std::unordered_map<std::string, std::string> table_;
};

class PosTagger {
public:
    virtual ~PosTagger() = default;
    virtual PosTag tag(const std::string& token) const = 0;
};

// Lexicon lookup with a fixed fallback: unknown words are NOUN unless they
// carry one of the adjective suffixes -ous/-ive/-al/-ful/-less/-ic.
class LexiconTagger : public PosTagger {
public:
    static const LexiconTagger& builtin();
    static LexiconTagger from_file(const std::string& path);
    static LexiconTagger from_tsv(std::string_view tsv);

    PosTag tag(const std::string& token) const override;
    size_t size() const { return table_.size(); }

private:
    std::unordered_map<std::string, PosTag> table_;
};

const std::unordered_set<std::string>& stopwords();

struct ParsedCorpus {
    std::vector<Document> docs;
    size_t skipped = 0;
};

// Line-delimited JSON records with keys date/source/title/body. Invalid
// lines are skipped and counted, never fatal; an unreadable file throws.
ParsedCorpus parse_corpus(const std::string& path);

void write_corpus(const std::vector<Document>& docs, const std::string& path);

std::string lemmatize(const std::string& token, const LemmaLexicon& lexicon);
inline std::string lemmatize(const std::string& token) { return lemmatize(token, LemmaLexicon::builtin()); }

std::vector<Phrase> extract_phrases(std::string_view text, const PosTagger& tagger,
                                    const LemmaLexicon& lexicon);
inline std::vector<Phrase> extract_phrases(std::string_view text) {
    return extract_phrases(text, LexiconTagger::builtin(), LemmaLexicon::builtin());
}

std::map<Date, std::vector<Phrase>> bucket_by_date(const std::vector<Document>& docs,
                                                   const PosTagger& tagger,
                                                   const LemmaLexicon& lexicon);
inline std::map<Date, std::vector<Phrase>> bucket_by_date(const std::vector<Document>& docs) {
    return bucket_by_date(docs, LexiconTagger::builtin(), LemmaLexicon::builtin());
}

// Lowercased word tokens split on Unicode word boundaries (non-ASCII
// codepoints count as word characters).
std::vector<std::string> tokenize(std::string_view text);

const char* tag_name(PosTag t);

}  // namespace ntopo
