#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ntopo/corpus.hpp"

using namespace ntopo;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = "test_corpus_" + std::to_string(counter++) + ".jsonl";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

// form -> dictionary lemma, fixed before the lemmatizer was written; the
// expected values are standard dictionary citation forms.
const std::pair<const char*, const char*> kLemmaChecklist[] = {
    {"invasions", "invasion"}, {"forces", "force"}, {"borders", "border"},
    {"attacks", "attack"}, {"soldiers", "soldier"}, {"governments", "government"},
    {"presidents", "president"}, {"elections", "election"}, {"protests", "protest"},
    {"weapons", "weapon"}, {"missiles", "missile"}, {"tanks", "tank"},
    {"troops", "troop"}, {"refugees", "refugee"}, {"sanctions", "sanction"},
    {"leaders", "leader"}, {"ministers", "minister"}, {"reports", "report"},
    {"sources", "source"}, {"officials", "official"}, {"statements", "statement"},
    {"negotiations", "negotiation"}, {"agreements", "agreement"}, {"regions", "region"},
    {"nations", "nation"}, {"alliances", "alliance"}, {"markets", "market"},
    {"prices", "price"}, {"banks", "bank"}, {"journalists", "journalist"},
    {"protesters", "protester"}, {"explosions", "explosion"}, {"airports", "airport"},
    {"buildings", "building"}, {"civilians", "civilian"}, {"villages", "village"},
    {"streets", "street"}, {"bridges", "bridge"}, {"convoys", "convoy"},
    {"flags", "flag"}, {"camps", "camp"}, {"zones", "zone"},
    {"threats", "threat"}, {"risks", "risk"}, {"plans", "plan"},
    {"talks", "talk"}, {"meetings", "meeting"}, {"summits", "summit"},
    {"wars", "war"}, {"days", "day"},
    {"companies", "company"}, {"economies", "economy"}, {"policies", "policy"},
    {"parties", "party"}, {"countries", "country"}, {"cities", "city"},
    {"armies", "army"}, {"authorities", "authority"}, {"communities", "community"},
    {"territories", "territory"}, {"casualties", "casualty"}, {"embassies", "embassy"},
    {"strategies", "strategy"}, {"stories", "story"}, {"studies", "study"},
    {"families", "family"}, {"bodies", "body"}, {"victories", "victory"},
    {"treaties", "treaty"}, {"enemies", "enemy"}, {"centuries", "century"},
    {"counties", "county"}, {"industries", "industry"}, {"agencies", "agency"},
    {"churches", "church"}, {"speeches", "speech"}, {"branches", "branch"},
    {"marches", "march"}, {"crashes", "crash"}, {"clashes", "clash"},
    {"boxes", "box"}, {"taxes", "tax"}, {"buses", "bus"},
    {"viruses", "virus"}, {"gases", "gas"}, {"classes", "class"},
    {"glasses", "glass"}, {"addresses", "address"}, {"businesses", "business"},
    {"witnesses", "witness"}, {"processes", "process"}, {"successes", "success"},
    {"losses", "loss"}, {"crosses", "cross"}, {"masses", "mass"},
    {"lives", "life"}, {"wives", "wife"}, {"knives", "knife"},
    {"leaves", "leaf"}, {"wolves", "wolf"}, {"halves", "half"},
    {"shelves", "shelf"}, {"thieves", "thief"}, {"calves", "calf"},
    {"loaves", "loaf"},
    {"children", "child"}, {"men", "man"}, {"women", "woman"},
    {"people", "person"}, {"feet", "foot"}, {"teeth", "tooth"},
    {"mice", "mouse"}, {"geese", "goose"}, {"criteria", "criterion"},
    {"phenomena", "phenomenon"}, {"media", "medium"}, {"data", "datum"},
    {"crises", "crisis"}, {"analyses", "analysis"}, {"theses", "thesis"},
    {"hypotheses", "hypothesis"}, {"indices", "index"}, {"matrices", "matrix"},
    {"vertices", "vertex"}, {"appendices", "appendix"}, {"heroes", "hero"},
    {"potatoes", "potato"}, {"tomatoes", "tomato"}, {"echoes", "echo"},
    {"vetoes", "veto"}, {"volcanoes", "volcano"}, {"embargoes", "embargo"},
    {"series", "series"}, {"species", "species"}, {"aircraft", "aircraft"},
    {"sheep", "sheep"}, {"deer", "deer"}, {"fish", "fish"},
    {"war", "war"}, {"government", "government"}, {"news", "news"},
    {"peace", "peace"}, {"crisis", "crisis"}, {"analysis", "analysis"},
    {"basis", "basis"}, {"politics", "politics"}, {"chaos", "chaos"},
    {"military", "military"}, {"russian", "russian"}, {"ukrainian", "ukrainian"},
    {"border", "border"}, {"invasion", "invasion"}, {"city", "city"},
    {"army", "army"}, {"headquarters", "headquarters"}, {"police", "police"},
    {"staff", "staff"}, {"bombing", "bombing"}, {"assault", "assault"},
    {"said", "say"}, {"went", "go"}, {"taken", "take"},
    {"made", "make"}, {"brought", "bring"}, {"began", "begin"},
    {"fell", "fall"}, {"held", "hold"},
    {"kept", "keep"}, {"knew", "know"}, {"led", "lead"},
    {"lost", "lose"}, {"met", "meet"}, {"paid", "pay"},
    {"sold", "sell"}, {"sent", "send"},
    {"shot", "shoot"}, {"stood", "stand"},
    {"thought", "think"},
    {"won", "win"},
    {"wrote", "write"}, {"fought", "fight"}, {"struck", "strike"},
    {"crossed", "cross"}, {"attacked", "attack"}, {"announced", "announce"},
    {"arrested", "arrest"}, {"launched", "launch"}, {"reported", "report"},
    {"claimed", "claim"}, {"confirmed", "confirm"}, {"demanded", "demand"},
    {"threatening", "threaten"}, {"negotiating", "negotiate"}, {"occupied", "occupy"},
    {"denied", "deny"}, {"carried", "carry"}, {"studied", "study"},
    {"running", "run"}, {"invaded", "invade"}, {"declared", "declare"},
};

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("parse_corpus keeps valid records in file order") {
    TempFile f(
        R"({"date":"2022-02-24","source":"a","title":"t1","body":"war began"})"
        "\n"
        R"({"date":"2022-02-25","source":"b","title":"t2","body":"more war"})"
        "\n"
        R"({"date":"2022-02-26","source":"c","title":"t3","body":"even more"})"
        "\n");
    auto parsed = parse_corpus(f.path);
    CHECK(parsed.docs.size() == 3);
    CHECK(parsed.skipped == 0);
    CHECK(parsed.docs[0].date == Date{2022, 2, 24});
    CHECK(parsed.docs[2].source == "c");
}

TEST_CASE("parse_corpus skips and counts invalid records") {
    TempFile f(
        R"({"date":"2022-02-24","source":"a","title":"t1","body":"x y"})"
        "\n"
        R"({"source":"b","title":"t2","body":"missing date"})"
        "\n"
        R"({"date":"2022-02-26","source":"c","title":"t3","body":"ok"})"
        "\n");
    auto parsed = parse_corpus(f.path);
    CHECK(parsed.docs.size() == 2);
    CHECK(parsed.skipped == 1);
}

TEST_CASE("parse_corpus on an empty file") {
    TempFile f("");
    auto parsed = parse_corpus(f.path);
    CHECK(parsed.docs.empty());
    CHECK(parsed.skipped == 0);
}

TEST_CASE("parse_corpus validates dates and bodies") {
    TempFile f(
        R"({"date":"2022-13-01","source":"a","title":"t","body":"x"})"
        "\n"
        R"({"date":"2022-02-24","source":"a","title":"t","body":"   "})"
        "\n"
        "not json at all\n");
    auto parsed = parse_corpus(f.path);
    CHECK(parsed.docs.empty());
    CHECK(parsed.skipped == 3);
}

TEST_CASE("parse_corpus throws on unreadable file") {
    CHECK_THROWS(parse_corpus("no_such_file.jsonl"));
}

TEST_CASE("lemmatize basics") {
    CHECK(lemmatize("invasions") == "invasion");
    CHECK(lemmatize("cities") == "city");
    CHECK(lemmatize("war") == "war");
    CHECK(lemmatize("Forces") == "force");  // case-folded first
}

TEST_CASE("lemmatize matches the frozen 200-word checklist") {
    int failures = 0;
    for (const auto& [form, want] : kLemmaChecklist) {
        if (lemmatize(form) != want) {
            ++failures;
            MESSAGE("lemmatize(", form, ") = ", lemmatize(form), ", want ", want);
        }
    }
    CHECK(failures == 0);
    CHECK(std::size(kLemmaChecklist) == 200);
}

TEST_CASE("lemmatize is idempotent over the checklist and corpus tokens") {
    for (const auto& [form, want] : kLemmaChecklist) {
        const std::string once = lemmatize(form);
        CHECK(lemmatize(once) == once);
    }
    for (const auto& tok : tokenize("Russian forces crossed the border before dawn as "
                                    "analysts watched markets and governments react")) {
        const std::string once = lemmatize(tok);
        CHECK(lemmatize(once) == once);
    }
}

TEST_CASE("extract_phrases on the leading example") {
    auto phrases = extract_phrases("Russian forces crossed the border");
    REQUIRE(phrases.size() == 2);
    REQUIRE(phrases[0].size() == 2);
    CHECK(phrases[0][0] == PhraseToken{"russian", PosTag::Adj});
    CHECK(phrases[0][1] == PhraseToken{"force", PosTag::Noun});
    REQUIRE(phrases[1].size() == 1);
    CHECK(phrases[1][0] == PhraseToken{"border", PosTag::Noun});
}

TEST_CASE("extract_phrases edge cases") {
    CHECK(extract_phrases("").empty());
    CHECK(extract_phrases("the of and").empty());
}

TEST_CASE("extract_phrases output is NOUN/ADJ only and ends in NOUN") {
    const char* samples[] = {
        "The quick brown fox jumps over the lazy dog",
        "Ukrainian president announced new sanctions against aggressive neighbors",
        "markets fell sharply as investors fled risky assets",
        "a strange empty paragraph with nothing but glue words of and the",
    };
    for (const char* text : samples) {
        for (const auto& phrase : extract_phrases(text)) {
            REQUIRE(!phrase.empty());
            CHECK(phrase.back().tag == PosTag::Noun);
            bool seen_noun = false;
            for (const auto& tok : phrase) {
                CHECK((tok.tag == PosTag::Noun || tok.tag == PosTag::Adj));
                if (tok.tag == PosTag::Noun) seen_noun = true;
                if (seen_noun) CHECK(tok.tag == PosTag::Noun);  // (ADJ)* then (NOUN)+
            }
        }
    }
}

TEST_CASE("bucket_by_date groups by day and keeps empty days") {
    std::vector<Document> docs = {
        {Date{2022, 2, 24}, "a", "t1", "russian forces"},
        {Date{2022, 2, 24}, "b", "t2", "ukrainian border"},
        {Date{2022, 2, 25}, "a", "t3", "the of and"},  // no extractable phrases
    };
    auto buckets = bucket_by_date(docs);
    REQUIRE(buckets.size() == 2);
    CHECK(buckets.at(Date{2022, 2, 24}).size() == 2);
    CHECK(buckets.at(Date{2022, 2, 25}).empty());
}

TEST_CASE("bucket_by_date preserves the total phrase count") {
    std::vector<Document> docs = {
        {Date{2022, 2, 24}, "a", "t1", "russian forces crossed the border"},
        {Date{2022, 2, 24}, "b", "t2", "massive protests in major cities"},
        {Date{2022, 2, 25}, "a", "t3", "markets and banks"},
        {Date{2022, 2, 26}, "c", "t4", "president spoke"},
    };
    size_t direct = 0;
    for (const auto& d : docs) direct += extract_phrases(d.body).size();
    size_t bucketed = 0;
    for (const auto& [day, phrases] : bucket_by_date(docs)) bucketed += phrases.size();
    CHECK(direct == bucketed);
}

TEST_CASE("tagger falls back to adjective suffixes then NOUN") {
    const auto& tagger = LexiconTagger::builtin();
    CHECK(tagger.tag("zorbulous") == PosTag::Adj);   // -ous
    CHECK(tagger.tag("blargic") == PosTag::Adj);     // -ic
    CHECK(tagger.tag("zorb") == PosTag::Noun);       // unknown
    CHECK(tagger.tag("crossed") == PosTag::Verb);    // lexicon hit
    CHECK(tagger.tag("hospital") == PosTag::Noun);   // noun despite -al
}

}  // TEST_SUITE
