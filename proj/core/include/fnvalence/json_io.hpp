#ifndef FNVALENCE_JSON_IO_HPP
#define FNVALENCE_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnvalence/grammar_gen.hpp"
#include "fnvalence/lexicon_align.hpp"
#include "fnvalence/lexicon_gen.hpp"
#include "fnvalence/shared_patterns.hpp"
#include "fnvalence/types.hpp"

namespace fnv {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical serializations: stable field order, deterministic bytes.
Json to_json(const AnnotatedSentence& s);
Json to_json(const SentencePattern& p);
Json to_json(const ValencePattern& v);
Json to_json(const SharedSet& s);
Json to_json(const Grammar& g);
Json to_json(const LexEntry& e);
Json to_json(const AlignmentResult& r);

AnnotatedSentence sentence_from_json(const Json& j);
SentencePattern sentence_pattern_from_json(const Json& j);
ValencePattern valence_pattern_from_json(const Json& j);
SharedSet shared_set_from_json(const Json& j);
Grammar grammar_from_json(const Json& j);
LexEntry lex_entry_from_json(const Json& j);
AlignmentResult alignment_from_json(const Json& j);

// Artifact envelope: {"schema_version": 1, "kind": ..., "settings": ...,
// "items"/"payload": ...}. Loading refuses on version mismatch.
Json make_artifact(const std::string& kind, const std::string& settings, Json payload);
Json load_artifact(const std::string& path, const std::string& expected_kind);
void write_artifact(const std::string& path, const Json& artifact);

std::vector<AnnotatedSentence> sentences_from_artifact(const Json& artifact);
std::vector<SentencePattern> sentence_patterns_from_artifact(const Json& artifact);
std::vector<ValencePattern> valence_patterns_from_artifact(const Json& artifact);
std::vector<LexEntry> lexicon_from_artifact(const Json& artifact);

Json sentences_artifact(const std::vector<AnnotatedSentence>& xs, const std::string& settings);
Json sentence_patterns_artifact(const std::vector<SentencePattern>& xs, const std::string& settings);
Json valence_patterns_artifact(const std::vector<ValencePattern>& xs, const std::string& settings);
Json lexicon_artifact(const std::vector<LexEntry>& xs, const std::string& settings);

}  // namespace fnv

#endif
