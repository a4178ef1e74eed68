#ifndef FNVALENCE_TYPES_HPP
#define FNVALENCE_TYPES_HPP

#include <optional>
#include <string>
#include <vector>

namespace fnv {

// ---------------------------------------------------------------- corpus side

enum class SourceScheme { PhraseStructure, Dependency };

// Inclusive character range into AnnotatedSentence::text.
struct Span {
  int start = 0;
  int end = 0;  // inclusive

  bool overlaps(const Span& other) const {
    return start <= other.end && other.start <= end;
  }
  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

enum class Diag {
  OverlappingFEs,
  MissingTarget,
  MissingLU,
  UnsupportedRealization,
  RepeatedFEDifferentTypes,
  SpanRepaired,        // FE/GF/PT layer spans disagreed; FE layer span kept
  AmbiguousHead,       // several tokens in an FE element point outside it
  DepheadOutOfRange,
  SpanOutOfBounds,
  IrreconcilableLabels,
  UnknownVerbType,
};

std::string to_string(Diag d);

struct Diagnostic {
  Diag code;
  std::string detail;  // free-form, e.g. the offending label
};

struct FESpan {
  std::string fe_name;
  std::optional<Span> span;  // absent = null-instantiated FE
  std::optional<std::string> raw_phrase_type;
  std::optional<std::string> raw_gf;
  std::optional<std::string> head_text;  // dependency scheme: surface form of the head token
  bool is_core = true;

  bool null_instantiated() const { return !span.has_value(); }
};

struct MorphComponent {
  std::string text;   // lemma form of the component, e.g. "känna", "för"
  std::string upos;   // universal POS
  std::string feats;  // universal features, e.g. "Fin", "Reflex"
};

struct LuMorph {
  std::vector<MorphComponent> components;  // first component is the finite verb
  std::string base_form;                   // space-separated lemma
};

struct AnnotatedSentence {
  std::string text;
  std::string language;      // e.g. "eng", "swe"
  std::string frame;
  std::string lu_lemma;      // space-separated for MWEs, e.g. "feel like"
  std::string lu_pos;        // universal POS, normally "VERB"
  std::vector<Span> target_span;   // non-empty, mutually non-overlapping
  std::vector<std::string> target_msd;  // per target token, scheme-specific morph tag (may be empty)
  std::vector<FESpan> fe_spans;
  SourceScheme scheme = SourceScheme::PhraseStructure;
  std::string source_id;
  LuMorph lu_morph_hint;     // LU morph description gathered at parse time
  std::vector<Diagnostic> flags;   // parse-time diagnostics; never abort a run

  std::string span_text(const Span& s) const {
    if (s.start < 0 || s.end >= static_cast<int>(text.size()) || s.end < s.start) return {};
    return text.substr(s.start, s.end - s.start + 1);
  }
};

// ---------------------------------------------------------------- pattern side

enum class PhraseCat { NP, VP, Adv, S, QS };
enum class VerbType { V, V2, V3, VV, VS, VQ, V2V, V2S, V2Q };
enum class GrammRel { nsubj, nsubjpass, dobj, iobj };
enum class Voice { Act, Pass };

std::string to_string(PhraseCat c);
std::string to_string(VerbType t);
std::string to_string(GrammRel r);
std::string to_string(Voice v);

std::optional<PhraseCat> phrase_cat_from(const std::string& s);
std::optional<VerbType> verb_type_from(const std::string& s);
std::optional<GrammRel> gramm_rel_from(const std::string& s);
std::optional<Voice> voice_from(const std::string& s);

struct FERealization {
  std::string fe_name;
  std::optional<PhraseCat> cat;   // absent only below Settings level 2 for unmapped raw labels
  std::string raw_label;          // scheme-specific label the cat was generalized from
  std::optional<GrammRel> rel;    // present iff cat == NP
  std::optional<std::string> marker;  // preposition/case, Adv-typed FEs
  bool is_core = true;
};

struct LuRef {
  std::string lemma;
  std::string pos = "VERB";
};

struct SentencePattern {
  std::string frame;
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<FERealization> fes;  // surface order
  LuRef lu;
  LuMorph lu_morph;
  int count = 1;
};

struct Settings {
  enum class Sub { None, A, B };
  int level = 0;        // 0..3
  Sub sub = Sub::None;

  bool generalize() const { return level >= 2; }
  bool skip_unsupported() const { return level >= 1; }
  bool prune_singletons() const { return level >= 3; }
  bool skip_repeated() const { return sub != Sub::None; }
  bool core_only() const { return sub == Sub::B; }

  std::string str() const;
  static std::optional<Settings> parse(const std::string& s);  // "3.B", "2.0", ...
};

// Normalized valence pattern member triple; ordering is lexical on serialization.
struct FETriple {
  std::string fe_name;
  PhraseCat cat = PhraseCat::NP;
  std::optional<GrammRel> rel;

  bool operator==(const FETriple&) const = default;
  auto operator<=>(const FETriple&) const = default;
};

struct ValencePattern {
  std::string frame;
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<FETriple> fes;  // sorted, duplicate-free
  int count = 0;
  // Member sentence patterns, merged across LUs by FE shape; descending
  // count, ties by fewest unmarked Adv slots, then serialization.
  std::vector<SentencePattern> members;
  SentencePattern top_sentence_pattern;
};

// Serializations used for grouping keys, tie-breaks and reports.
std::string fe_key(const FERealization& fe, bool generalized, bool with_marker);
std::string serialize(const SentencePattern& p, bool generalized = true);
std::string serialize(const FETriple& t);
std::string serialize(const ValencePattern& v);

}  // namespace fnv

#endif
