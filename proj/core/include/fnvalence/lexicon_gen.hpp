#ifndef FNVALENCE_LEXICON_GEN_HPP
#define FNVALENCE_LEXICON_GEN_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fnvalence/shared_patterns.hpp"
#include "fnvalence/types.hpp"

namespace fnv {

enum class MweClass {
  Simple,
  Particle,
  Reflexive,
  ParticleParticle,
  ParticleReflexive,
  ReflexiveParticle,
  Unsupported,
};

std::string to_string(MweClass c);

struct LexEntry {
  std::string id;         // base_form + "_" + verb_type + "_" + frame
  std::string base_form;  // space-separated lemma
  VerbType verb_type = VerbType::V;
  std::string frame;
  LuMorph lu_morph;
  MweClass mwe_class = MweClass::Simple;
  std::optional<std::string> linearization;  // absent: Unsupported MWE or OOV verb
};

struct ParadigmRef {
  std::string constructor;               // regV, irregV, mkV, ...
  std::vector<std::string> argument_forms;
  int source_priority = 0;               // higher wins
};

// Matches the component POS sequence against the supported patterns;
// everything else is Unsupported.
MweClass classify_mwe(const LuMorph& m);

// One entry per distinct (base_form, verb_type, frame) among sentence
// patterns covered by the shared set.
std::vector<LexEntry> collect_lexicon(const SharedSet& shared,
                                      const std::vector<SentencePattern>& sentence_patterns,
                                      const std::string& language);

// Line-oriented paradigm resources: lemma TAB constructor TAB form...
// Files are given in preference order, later (higher-preference) sources
// overwrite earlier ones.
std::map<std::string, ParadigmRef> load_paradigms(const std::vector<std::string>& paths,
                                                  std::vector<std::string>* warnings = nullptr);
std::map<std::string, ParadigmRef> load_paradigm_stream(std::istream& tsv, int priority,
                                                        std::map<std::string, ParadigmRef> into,
                                                        std::vector<std::string>* warnings = nullptr);

struct LexiconReport {
  int total = 0;
  int linearized = 0;
  // entry id -> reason + morph pattern, for the gap TSV.
  std::vector<std::array<std::string, 3>> gaps;
};

// Fills LexEntry::linearization in place; gaps are data, not failures.
LexiconReport gen_concrete_lexicon(std::vector<LexEntry>& entries,
                                   const std::map<std::string, ParadigmRef>& paradigms);

std::string lexicon_abstract_text(const std::vector<LexEntry>& entries,
                                  const std::string& module_name);
std::string lexicon_concrete_text(const std::vector<LexEntry>& entries,
                                  const std::string& module_name,
                                  const std::string& language);
std::string gap_report_tsv(const LexiconReport& report);

// Identifier text: diacritics preserved, spaces to underscores.
std::string lemma_identifier(const std::string& base_form);

}  // namespace fnv

#endif
