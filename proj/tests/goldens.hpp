// Golden fixtures: the engineered Desiring corpus behind the summary golden,
// and the expected grammar module texts for the Desiring function set.
#ifndef FNVALENCE_TESTS_GOLDENS_HPP
#define FNVALENCE_TESTS_GOLDENS_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fnvalence/shared_patterns.hpp"
#include "fnvalence/types.hpp"

namespace goldens {

using fixtures::FeSpec;
using fixtures::sentence;

// Desiring sentence patterns engineered so the frame summary at display
// thresholds {valence >= 5, member >= 2} reproduces the documented block.
inline std::vector<fnv::SentencePattern> desiring_corpus() {
  namespace f = fnv;
  using PC = f::PhraseCat;
  using GR = f::GrammRel;
  std::vector<f::SentencePattern> ps;

  // {Event/VP, Experiencer/NP.nsubj} : 61 = 59 + 2
  ps.push_back(sentence("Desiring", f::VerbType::VV, f::Voice::Act,
                        {{"Experiencer", PC::NP, GR::nsubj}, {"Event", PC::VP}},
                        "want", 59));
  ps.push_back(sentence("Desiring", f::VerbType::VV, f::Voice::Act,
                        {{"Event", PC::VP}, {"Experiencer", PC::NP, GR::nsubj}},
                        "want", 2));

  // {Experiencer/NP.nsubj, Focal_participant/NP.dobj} : 61 = 55 + 6
  ps.push_back(sentence("Desiring", f::VerbType::V2, f::Voice::Act,
                        {{"Experiencer", PC::NP, GR::nsubj},
                         {"Focal_participant", PC::NP, GR::dobj}},
                        "want", 55));
  ps.push_back(sentence("Desiring", f::VerbType::V2, f::Voice::Act,
                        {{"Focal_participant", PC::NP, GR::dobj},
                         {"Experiencer", PC::NP, GR::nsubj}},
                        "want", 6));

  // {Experiencer/NP.nsubj, Focal_participant/Adv} : 43 = 26 + 7 + 2 + 8x1
  auto adv = [&](std::optional<std::string> marker, int count) {
    ps.push_back(sentence(
        "Desiring", f::VerbType::V, f::Voice::Act,
        {{"Experiencer", PC::NP, GR::nsubj},
         FeSpec{"Focal_participant", PC::Adv, std::nullopt, marker}},
        "yearn", count));
  };
  adv("for", 26);
  adv("after", 7);
  adv(std::nullopt, 2);
  for (const char* m : {"at", "about", "of", "on", "to", "toward", "upon", "with"})
    adv(std::string(m), 1);

  // hidden active valences: 27 x 4 + 1 x 2 = 110 (Act total 275)
  for (int i = 0; i < 28; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "Filler_%02d", i);
    ps.push_back(sentence("Desiring", f::VerbType::V, f::Voice::Act,
                          {{"Experiencer", PC::NP, GR::nsubj},
                           {name, PC::Adv}},
                          "long", i == 27 ? 2 : 4));
  }

  // Pass: visible {Experiencer/NP.dobj, Focal_participant/NP.nsubjpass} : 5
  ps.push_back(sentence("Desiring", f::VerbType::V2, f::Voice::Pass,
                        {{"Focal_participant", PC::NP, GR::nsubjpass},
                         {"Experiencer", PC::NP, GR::dobj}},
                        "want", 5));
  // hidden passive valences: 4 + 4 (Pass total 13)
  ps.push_back(sentence("Desiring", f::VerbType::V2, f::Voice::Pass,
                        {{"Focal_participant", PC::NP, GR::nsubjpass},
                         {"Experiencer", PC::NP, GR::dobj},
                         {"Filler_28", PC::Adv}},
                        "want", 4));
  ps.push_back(sentence("Desiring", f::VerbType::V2, f::Voice::Pass,
                        {{"Focal_participant", PC::NP, GR::nsubjpass},
                         {"Filler_29", PC::Adv}},
                        "want", 4));
  return ps;
}

inline const char* summary_golden() {
  return
      "Act : 275\n"
      "  Event/VP Experiencer/NP.nsubj : 61\n"
      "    Experiencer/NP.nsubj Event/VP : 59\n"
      "    Event/VP Experiencer/NP.nsubj : 2\n"
      "  Experiencer/NP.nsubj Focal_participant/NP.dobj : 61\n"
      "    Experiencer/NP.nsubj Focal_participant/NP.dobj : 55\n"
      "    Focal_participant/NP.dobj Experiencer/NP.nsubj : 6\n"
      "  Experiencer/NP.nsubj Focal_participant/Adv : 43\n"
      "    Experiencer/NP.nsubj Focal_participant/Adv[for] : 26\n"
      "    Experiencer/NP.nsubj Focal_participant/Adv[after] : 7\n"
      "    Experiencer/NP.nsubj Focal_participant/Adv : 2\n"
      "    ...\n"
      "  ...\n"
      "Pass : 13\n"
      "  Experiencer/NP.dobj Focal_participant/NP.nsubjpass : 5\n"
      "    Focal_participant/NP.nsubjpass Experiencer/NP.dobj : 5\n"
      "  ...\n";
}

// Shared set holding the four Desiring patterns with an English witness each.
inline fnv::SharedSet desiring_shared_set() {
  namespace f = fnv;
  using PC = f::PhraseCat;
  using GR = f::GrammRel;
  using fixtures::triple;
  using fixtures::valence;

  auto make = [](const fnv::ValencePattern& v,
                 const fnv::SentencePattern& witness) {
    fnv::SharedPattern sp;
    sp.pattern = v;
    sp.pattern.count = 0;
    sp.witnesses["eng"] = witness;
    return sp;
  };

  fnv::SharedSet s;
  s.patterns.push_back(
      make(valence("Desiring", f::VerbType::V, f::Voice::Act,
                   {triple("Experiencer", PC::NP, GR::nsubj),
                    triple("Focal_participant", PC::Adv)}),
           sentence("Desiring", f::VerbType::V, f::Voice::Act,
                    {{"Experiencer", PC::NP, GR::nsubj},
                     {"Focal_participant", PC::Adv}})));
  s.patterns.push_back(
      make(valence("Desiring", f::VerbType::V2, f::Voice::Act,
                   {triple("Experiencer", PC::NP, GR::nsubj),
                    triple("Focal_participant", PC::NP, GR::dobj)}),
           sentence("Desiring", f::VerbType::V2, f::Voice::Act,
                    {{"Experiencer", PC::NP, GR::nsubj},
                     {"Focal_participant", PC::NP, GR::dobj}})));
  s.patterns.push_back(
      make(valence("Desiring", f::VerbType::V2, f::Voice::Pass,
                   {triple("Experiencer", PC::NP, GR::dobj),
                    triple("Focal_participant", PC::NP, GR::nsubjpass)}),
           sentence("Desiring", f::VerbType::V2, f::Voice::Pass,
                    {{"Focal_participant", PC::NP, GR::nsubjpass},
                     {"Experiencer", PC::NP, GR::dobj}})));
  s.patterns.push_back(
      make(valence("Desiring", f::VerbType::VV, f::Voice::Act,
                   {triple("Event", PC::VP),
                    triple("Experiencer", PC::NP, GR::nsubj)}),
           sentence("Desiring", f::VerbType::VV, f::Voice::Act,
                    {{"Experiencer", PC::NP, GR::nsubj}, {"Event", PC::VP}})));
  return s;
}

inline std::vector<std::string> abstract_golden_lines() {
  return {
      "Desiring_V : Experiencer_NP -> Focal_participant_Adv -> V -> Clause ;",
      "Desiring_VV : Event_VP -> Experiencer_NP -> VV -> Clause ;",
      "Desiring_V2 : Experiencer_NP -> Focal_participant_NP -> V2 -> Clause ;",
      "Desiring_V2_Pass : Experiencer_NP -> Focal_participant_NP -> V2 -> Clause ;",
  };
}

inline std::vector<std::string> concrete_golden_lines() {
  return {
      "Desiring_V experiencer_np focal_participant_adv v = { np = fromMaybe NP "
      "emptyNP experiencer_np ; vp = mkVP (mkVP v) (fromMaybe Adv emptyAdv "
      "focal_participant_adv) } ;",
      "Desiring_VV event_vp experiencer_np vv = { np = fromMaybe NP emptyNP "
      "experiencer_np ; vp = mkVP vv (fromMaybe VP emptyVP event_vp) } ;",
      "Desiring_V2 experiencer_np focal_participant_np v2 = { np = fromMaybe NP "
      "emptyNP experiencer_np ; vp = mkVP v2 (fromMaybe NP emptyNP "
      "focal_participant_np) } ;",
      "Desiring_V2_Pass experiencer_np focal_participant_np v2 = { np = "
      "fromMaybe NP emptyNP focal_participant_np ; vp = mkVP (passiveVP v2) "
      "(mkAdv by8agent_Prep (fromMaybe NP emptyNP experiencer_np)) } ;",
  };
}

}  // namespace goldens

#endif
