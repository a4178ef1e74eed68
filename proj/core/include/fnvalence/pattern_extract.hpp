#ifndef FNVALENCE_PATTERN_EXTRACT_HPP
#define FNVALENCE_PATTERN_EXTRACT_HPP

#include <optional>
#include <variant>
#include <vector>

#include "fnvalence/catmap.hpp"
#include "fnvalence/types.hpp"

namespace fnv {

struct Skip {
  Diagnostic reason;
};

using ExtractResult = std::variant<SentencePattern, Skip>;

// Grammatical voice plus the inferred relation per FE (indexed as s.fe_spans).
struct VoiceRelations {
  Voice voice = Voice::Act;
  std::vector<std::optional<GrammRel>> rels;
};

// Act/Pass from target-verb morphology; NP relations from the shallow
// GF labels (PhraseStructure) or dependency relations (Dependency).
VoiceRelations infer_voice_and_relations(const AnnotatedSentence& s,
                                         const CatMap& catmap);

// Decision table over the complement multiset; subject (and, under Pass,
// the demoted subject) excluded. nullopt when the multiset is not covered.
std::optional<VerbType> infer_verb_type(const std::vector<FERealization>& fes,
                                        Voice voice);

ExtractResult extract_sentence_pattern(const AnnotatedSentence& s,
                                       const Settings& cfg,
                                       const CatMap& catmap);

struct ExtractStats {
  int examples_in = 0;
  int examples_kept = 0;
  int skipped = 0;
};

// Whole-corpus extraction; skipped sentences are counted, not fatal.
std::vector<SentencePattern> extract_corpus(
    const std::vector<AnnotatedSentence>& sentences, const Settings& cfg,
    const CatMap& catmap, ExtractStats* stats = nullptr);

// Merge structurally identical sentence patterns, summing counts.
// Identity covers surface order and Adv markers (raw labels below S2).
std::vector<SentencePattern> aggregate(std::vector<SentencePattern> patterns,
                                       bool generalized = true);

}  // namespace fnv

#endif
