#ifndef FNVALENCE_REALIZER_HPP
#define FNVALENCE_REALIZER_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnvalence/grammar_gen.hpp"
#include "fnvalence/lexicon_gen.hpp"
#include "fnvalence/types.hpp"

namespace fnv {

struct RealizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Tense { Pres, Past };
enum class Person { P1, P2, P3 };
enum class Number { Sg, Pl };

struct Agr {
  Person person = Person::P3;
  Number number = Number::Sg;
};

// Minimal morphology: enough to inflect template output, not a grammar engine.
struct VerbForms {
  std::string inf;
  std::string pres_sg3;
  std::string pres_plain;
  std::string past;
  std::string past_part;
  std::string particle;  // trailing particle/reflexive words, space-joined
  std::string language = "eng";
};

VerbForms make_verb(const ParadigmRef& paradigm, const LuMorph& morph,
                    const std::string& language);

struct VPhrase;

struct Phrase {
  PhraseCat cat = PhraseCat::NP;
  std::string surface;
  Agr agr;                       // NP agreement, pronouns recognized
  std::shared_ptr<VPhrase> vp;   // set when a VP-typed phrase wraps a clause part
};

using MaybePhrase = std::optional<Phrase>;

Phrase make_np(const std::string& surface);   // agreement from pronoun table
Phrase make_adv(const std::string& surface);
Phrase make_phrase(PhraseCat cat, const std::string& surface);

// from_maybe: Present(x) -> x, Absent -> the cat-appropriate empty phrase.
Phrase from_maybe(const MaybePhrase& m, PhraseCat cat);

struct VPhrase {
  VerbForms verb;
  Voice voice = Voice::Act;
  std::vector<std::string> comps;  // object/clausal complement surfaces, in order
  std::shared_ptr<Phrase> vcomp;   // VV complement
  std::vector<std::string> advs;   // Adv chain incl. passive agent phrase

  std::string render_finite(Tense t, const Agr& agr) const;
  std::string render_infinitive() const;  // bare, no "to"
};

struct Clause {
  Phrase np;
  VPhrase vp;
};

// Executes a generated concrete rule on toy phrases.
Clause apply_frame_function(const ConcreteRule& rule,
                            const std::map<std::string, MaybePhrase>& args,
                            const VerbForms& verb);

std::string combine(const Clause& c, Tense tense,
                    const std::vector<Phrase>& adjuncts = {});

std::string normalize_ws(const std::string& s);

}  // namespace fnv

#endif
