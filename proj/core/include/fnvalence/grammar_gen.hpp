#ifndef FNVALENCE_GRAMMAR_GEN_HPP
#define FNVALENCE_GRAMMAR_GEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fnvalence/shared_patterns.hpp"
#include "fnvalence/types.hpp"

namespace fnv {

struct FrameFunction {
  std::string name;
  std::string frame;
  std::vector<std::string> args;  // FE category names, alphabetical
  VerbType verb_arg = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<FETriple> fes;      // pattern triples backing the args
};

// Order-free syntactic shape used for template dispatch and the census.
struct SyntacticSignature {
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<std::string> args;  // sorted "NP_nsubj"/"Adv"/... labels

  bool operator==(const SyntacticSignature&) const = default;
  auto operator<=>(const SyntacticSignature&) const = default;
  std::string str() const;  // e.g. "V2 Act NP_dobj NP_nsubj"
};

SyntacticSignature syntactic_signature(const ValencePattern& v);

// FE category identifier: fe_name + "_" + cat suffix.
std::string fe_category(const std::string& fe_name, PhraseCat cat);

// frame + "_" + verb type (+ "_Pass") (+ "_" + n on collision; n assigned by
// descending count then lexicographic FE serialization, the first sibling
// keeping the bare name).
std::string function_name(const ValencePattern& v,
                          const std::vector<ValencePattern>& siblings);

// One complement slot of a concrete linearization rule.
struct ComplementSlot {
  enum class Kind { Obj, IObj, VComp, SComp, QComp, Adv };
  Kind kind = Kind::Obj;
  std::string arg;       // bound FE category name, empty = fixed empty phrase
  PhraseCat cat = PhraseCat::NP;
};

struct ConcreteRule {
  std::string function;
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<std::string> args;       // alphabetical, mirrors the abstract fun
  std::string subject_arg;             // nsubj/nsubjpass-bound arg, empty = emptyNP
  std::string agent_arg;               // passive by-agent arg, empty = dropped
  std::vector<ComplementSlot> complements;  // template-canonical order, Adv per witness
};

struct Grammar {
  std::vector<FrameFunction> functions;            // deterministic order
  std::vector<std::string> categories;             // sorted FE category names
  std::map<std::string, std::vector<std::string>> ungenerable;  // lang -> function names
  std::map<std::string, std::vector<ConcreteRule>> rules;       // lang -> rules
};

// Abstract syntax from the shared set: cat block then fun block,
// byte-identical for identical input.
Grammar build_grammar(const SharedSet& shared, const std::vector<std::string>& languages);

std::string gen_abstract(const Grammar& g, const std::string& module_name = "FrameNet");

std::string gen_concrete(const Grammar& g, const std::string& language,
                         const std::string& module_name = "FrameNet");

// Census rows: verb type, voice, argument labels, frequency.
std::string signature_census_tsv(const SharedSet& shared);

}  // namespace fnv

#endif
