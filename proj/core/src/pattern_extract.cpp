#include "fnvalence/pattern_extract.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fnvalence/corpus_ingest.hpp"

namespace fnv {

namespace {

bool be_form(const std::string& w) {
  static const char* forms[] = {"is",  "are",  "was",   "were", "am",
                                "be",  "been", "being", "'s",   "'re", "'m"};
  for (const char* f : forms)
    if (w == f) return true;
  return false;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Passive detection, phrase-structure scheme: past-participle target tag
// plus a preceding "be" form.
bool ps_passive(const AnnotatedSentence& s) {
  bool participle = false;
  for (const std::string& tag : s.target_msd)
    if (tag.size() >= 3 && tag[0] == 'V' && tag.back() == 'N') participle = true;
  if (!participle) return false;
  int target_start = s.target_span.empty() ? 0 : s.target_span.front().start;
  std::istringstream is(s.text.substr(0, std::max(0, target_start)));
  for (std::string w; is >> w;)
    if (be_form(lower(w))) return true;
  return false;
}

// Dependency scheme: msd voice feature when present, else the participle
// heuristic.
bool dep_passive(const AnnotatedSentence& s) {
  for (const std::string& msd : s.target_msd) {
    if (msd.find("SFO") != std::string::npos) return true;
    if (msd.find("AKT") != std::string::npos) return false;
  }
  bool participle = false;
  for (const std::string& msd : s.target_msd)
    if (msd.find("PC") != std::string::npos || msd.find("SUP") != std::string::npos)
      participle = true;
  if (!participle) return false;
  for (const FESpan& fe : s.fe_spans)
    if (fe.raw_gf && *fe.raw_gf == "SS") return true;
  return false;
}

}  // namespace

VoiceRelations infer_voice_and_relations(const AnnotatedSentence& s,
                                         const CatMap& catmap) {
  VoiceRelations out;
  out.voice = (s.scheme == SourceScheme::PhraseStructure ? ps_passive(s)
                                                         : dep_passive(s))
                  ? Voice::Pass
                  : Voice::Act;
  out.rels.assign(s.fe_spans.size(), std::nullopt);

  std::vector<std::size_t> dobj_order;
  for (std::size_t i = 0; i < s.fe_spans.size(); ++i) {
    const FESpan& fe = s.fe_spans[i];
    if (fe.null_instantiated() || !fe.raw_phrase_type) continue;
    auto res = catmap.generalize(*fe.raw_phrase_type, s.scheme, fe.head_text);
    auto* gen = std::get_if<Generalized>(&res);
    if (!gen || gen->cat != PhraseCat::NP) continue;

    std::string gf = fe.raw_gf.value_or("");
    GrammRel rel = GrammRel::dobj;
    if (s.scheme == SourceScheme::PhraseStructure) {
      if (gf == "Ext")
        rel = out.voice == Voice::Act ? GrammRel::nsubj : GrammRel::nsubjpass;
    } else {
      if (gf == "SS")
        rel = out.voice == Voice::Act ? GrammRel::nsubj : GrammRel::nsubjpass;
      else if (gf == "IO")
        rel = GrammRel::iobj;
    }
    out.rels[i] = rel;
    if (rel == GrammRel::dobj) dobj_order.push_back(i);
  }

  // Double object: the first NP object in surface order is the indirect one.
  if (dobj_order.size() == 2) {
    std::vector<std::size_t> order = dobj_order;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return s.fe_spans[a].span->start < s.fe_spans[b].span->start;
    });
    out.rels[order.front()] = GrammRel::iobj;
  }
  return out;
}

std::optional<VerbType> infer_verb_type(const std::vector<FERealization>& fes,
                                        Voice voice) {
  int np = 0, vp = 0, sc = 0, qs = 0;
  bool clausal = false;
  for (const FERealization& fe : fes) {
    if (!fe.cat) continue;
    if (*fe.cat == PhraseCat::VP || *fe.cat == PhraseCat::S || *fe.cat == PhraseCat::QS)
      clausal = true;
  }
  for (const FERealization& fe : fes) {
    if (!fe.cat) continue;
    switch (*fe.cat) {
      case PhraseCat::NP:
        if (fe.rel == GrammRel::nsubj) break;  // subject
        if (voice == Voice::Pass) {
          // Demoted subjects keep the corpus "object" label; the promoted
          // object is the nsubjpass unless a clausal complement carries
          // the role.
          if (fe.rel == GrammRel::dobj) break;
          if (fe.rel == GrammRel::nsubjpass && clausal) break;
          ++np;
        } else {
          if (fe.rel == GrammRel::nsubjpass) break;
          ++np;
        }
        break;
      case PhraseCat::VP: ++vp; break;
      case PhraseCat::S: ++sc; break;
      case PhraseCat::QS: ++qs; break;
      case PhraseCat::Adv: break;
    }
  }
  if (voice == Voice::Pass && np + vp + sc + qs == 0) return VerbType::V2;
  if (vp + sc + qs == 0) {
    if (np == 0) return VerbType::V;
    if (np == 1) return VerbType::V2;
    if (np == 2) return VerbType::V3;
    return std::nullopt;
  }
  if (vp == 1 && sc == 0 && qs == 0 && np <= 1)
    return np == 0 ? VerbType::VV : VerbType::V2V;
  if (sc == 1 && vp == 0 && qs == 0 && np <= 1)
    return np == 0 ? VerbType::VS : VerbType::V2S;
  if (qs == 1 && vp == 0 && sc == 0 && np <= 1)
    return np == 0 ? VerbType::VQ : VerbType::V2Q;
  return std::nullopt;
}

ExtractResult extract_sentence_pattern(const AnnotatedSentence& s,
                                       const Settings& cfg,
                                       const CatMap& catmap) {
  auto diags = validate_sentence(s);
  for (const Diagnostic& d : diags) {
    if (d.code == Diag::MissingTarget || d.code == Diag::MissingLU ||
        d.code == Diag::OverlappingFEs || d.code == Diag::SpanOutOfBounds ||
        d.code == Diag::IrreconcilableLabels)
      return Skip{d};
  }

  VoiceRelations vr = infer_voice_and_relations(s, catmap);

  // Surface order; null-instantiated FEs dropped (no grammatical annotations).
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < s.fe_spans.size(); ++i)
    if (!s.fe_spans[i].null_instantiated()) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.fe_spans[a].span->start < s.fe_spans[b].span->start;
  });

  std::vector<FERealization> fes;
  for (std::size_t i : order) {
    const FESpan& span = s.fe_spans[i];
    FERealization fe;
    fe.fe_name = span.fe_name;
    fe.raw_label = span.raw_phrase_type.value_or("");
    fe.is_core = span.is_core;
    fe.rel = vr.rels[i];
    auto res = catmap.generalize(fe.raw_label, s.scheme, span.head_text);
    if (auto* gen = std::get_if<Generalized>(&res)) {
      fe.cat = gen->cat;
      if (gen->cat == PhraseCat::Adv) fe.marker = gen->marker;
    } else if (cfg.skip_unsupported()) {
      return Skip{{Diag::UnsupportedRealization, fe.raw_label}};
    }
    if (fe.cat != PhraseCat::NP) fe.rel = std::nullopt;
    fes.push_back(std::move(fe));
  }

  int subjects = 0;
  for (const FERealization& fe : fes)
    if (fe.rel == GrammRel::nsubj || fe.rel == GrammRel::nsubjpass) ++subjects;
  if (subjects > 1)
    return Skip{{Diag::IrreconcilableLabels, "multiple subject relations"}};

  if (cfg.skip_repeated()) {
    std::vector<FERealization> kept;
    std::map<std::string, std::string> first_cat;
    for (FERealization& fe : fes) {
      std::string catkey = fe.cat ? to_string(*fe.cat) : fe.raw_label;
      auto [it, inserted] = first_cat.emplace(fe.fe_name, catkey);
      if (inserted) {
        kept.push_back(std::move(fe));
      } else if (it->second != catkey) {
        return Skip{{Diag::RepeatedFEDifferentTypes, fe.fe_name}};
      }
      // duplicate with identical category: collapsed into the first
    }
    fes = std::move(kept);
  }

  if (cfg.core_only()) {
    std::erase_if(fes, [](const FERealization& fe) { return !fe.is_core; });
  }

  auto vt = infer_verb_type(fes, vr.voice);
  if (!vt) return Skip{{Diag::UnknownVerbType, serialize(SentencePattern{
                            s.frame, VerbType::V, vr.voice, fes, {}, {}, 1})}};

  SentencePattern p;
  p.frame = s.frame;
  p.verb_type = *vt;
  p.voice = vr.voice;
  p.fes = std::move(fes);
  p.lu = {s.lu_lemma, s.lu_pos};
  p.lu_morph = s.lu_morph_hint;
  p.count = 1;
  return p;
}

std::vector<SentencePattern> extract_corpus(
    const std::vector<AnnotatedSentence>& sentences, const Settings& cfg,
    const CatMap& catmap, ExtractStats* stats) {
  std::vector<SentencePattern> out;
  ExtractStats st;
  for (const AnnotatedSentence& s : sentences) {
    ++st.examples_in;
    auto res = extract_sentence_pattern(s, cfg, catmap);
    if (auto* p = std::get_if<SentencePattern>(&res)) {
      out.push_back(std::move(*p));
      ++st.examples_kept;
    } else {
      ++st.skipped;
    }
  }
  if (stats) *stats = st;
  return out;
}

std::vector<SentencePattern> aggregate(std::vector<SentencePattern> patterns,
                                       bool generalized) {
  std::map<std::string, SentencePattern> grouped;
  for (SentencePattern& p : patterns) {
    std::string key = serialize(p, generalized);
    auto it = grouped.find(key);
    if (it == grouped.end())
      grouped.emplace(key, std::move(p));
    else
      it->second.count += p.count;
  }
  std::vector<SentencePattern> out;
  out.reserve(grouped.size());
  for (auto& [key, p] : grouped) out.push_back(std::move(p));
  return out;
}

}  // namespace fnv
