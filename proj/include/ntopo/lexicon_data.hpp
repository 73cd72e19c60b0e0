#pragma once

namespace ntopo::data {

// Embedded copies of the shipped word lists (see tools/gen_lexicon.py).
extern const char* kStopwords;
extern const char* kTaggerLexicon;
extern const char* kLemmaLexicon;

}  // namespace ntopo::data
