#ifndef FNVALENCE_CORPUS_INGEST_HPP
#define FNVALENCE_CORPUS_INGEST_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnvalence/types.hpp"

namespace fnv {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IngestOptions {
  std::string language;           // stamped on every sentence
  std::string default_frame;      // used when a sentence has no frame attribute
  std::string default_lu;         // used when a sentence has no luName attribute
  // frame -> set of core FE names; empty map means "trust per-FE attributes,
  // default core".
  std::map<std::string, std::set<std::string>> core_fes;
};

// BFN-style phrase-structure corpus: <sentence> with annotationSet layers
// FE/GF/PT/Target carrying inclusive start/end character offsets.
std::vector<AnnotatedSentence> parse_phrase_structure_corpus(
    std::istream& source, const IngestOptions& opts = {});

// SweFN-style dependency corpus: <sentence> with <w> tokens
// (pos/msd, ref, dephead, deprel) and <element name="..."> wrappers.
std::vector<AnnotatedSentence> parse_dependency_corpus(
    std::istream& source, const IngestOptions& opts = {});

// Total function; empty result means the sentence is usable.
std::vector<Diagnostic> validate_sentence(const AnnotatedSentence& s);

}  // namespace fnv

#endif
