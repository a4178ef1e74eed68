#include "fnvalence/json_io.hpp"

#include <fstream>

namespace fnv {

namespace {

Json span_json(const Span& s) { return Json::array({s.start, s.end}); }
Span span_from(const Json& j) { return Span{j.at(0).get<int>(), j.at(1).get<int>()}; }

Json morph_json(const LuMorph& m) {
  Json comps = Json::array();
  for (const MorphComponent& c : m.components)
    comps.push_back({{"text", c.text}, {"upos", c.upos}, {"feats", c.feats}});
  return {{"base_form", m.base_form}, {"components", comps}};
}

LuMorph morph_from(const Json& j) {
  LuMorph m;
  m.base_form = j.at("base_form").get<std::string>();
  for (const Json& c : j.at("components"))
    m.components.push_back({c.at("text").get<std::string>(),
                            c.at("upos").get<std::string>(),
                            c.at("feats").get<std::string>()});
  return m;
}

Diag diag_from(const std::string& s) {
  static const std::pair<const char*, Diag> table[] = {
      {"OverlappingFEs", Diag::OverlappingFEs},
      {"MissingTarget", Diag::MissingTarget},
      {"MissingLU", Diag::MissingLU},
      {"UnsupportedRealization", Diag::UnsupportedRealization},
      {"RepeatedFEDifferentTypes", Diag::RepeatedFEDifferentTypes},
      {"SpanRepaired", Diag::SpanRepaired},
      {"AmbiguousHead", Diag::AmbiguousHead},
      {"DepheadOutOfRange", Diag::DepheadOutOfRange},
      {"SpanOutOfBounds", Diag::SpanOutOfBounds},
      {"IrreconcilableLabels", Diag::IrreconcilableLabels},
      {"UnknownVerbType", Diag::UnknownVerbType}};
  for (const auto& [name, d] : table)
    if (s == name) return d;
  throw SchemaError("unknown diagnostic code: " + s);
}

template <typename T, typename F>
void set_opt(Json& j, const char* key, const std::optional<T>& v, F f) {
  if (v) j[key] = f(*v);
}

std::optional<std::string> opt_str(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

Json fe_realization_json(const FERealization& fe) {
  Json j;
  j["fe_name"] = fe.fe_name;
  if (fe.cat) j["cat"] = to_string(*fe.cat);
  j["raw_label"] = fe.raw_label;
  if (fe.rel) j["rel"] = to_string(*fe.rel);
  if (fe.marker) j["marker"] = *fe.marker;
  j["is_core"] = fe.is_core;
  return j;
}

FERealization fe_realization_from(const Json& j) {
  FERealization fe;
  fe.fe_name = j.at("fe_name").get<std::string>();
  if (auto s = opt_str(j, "cat")) {
    fe.cat = phrase_cat_from(*s);
    if (!fe.cat) throw SchemaError("bad phrase cat: " + *s);
  }
  fe.raw_label = j.at("raw_label").get<std::string>();
  if (auto s = opt_str(j, "rel")) {
    fe.rel = gramm_rel_from(*s);
    if (!fe.rel) throw SchemaError("bad relation: " + *s);
  }
  fe.marker = opt_str(j, "marker");
  fe.is_core = j.at("is_core").get<bool>();
  return fe;
}

Json triple_json(const FETriple& t) {
  Json j;
  j["fe_name"] = t.fe_name;
  j["cat"] = to_string(t.cat);
  if (t.rel) j["rel"] = to_string(*t.rel);
  return j;
}

FETriple triple_from(const Json& j) {
  FETriple t;
  t.fe_name = j.at("fe_name").get<std::string>();
  auto cat = phrase_cat_from(j.at("cat").get<std::string>());
  if (!cat) throw SchemaError("bad phrase cat in triple");
  t.cat = *cat;
  if (auto s = opt_str(j, "rel")) t.rel = gramm_rel_from(*s);
  return t;
}

VerbType verb_type_req(const Json& j, const char* key) {
  auto v = verb_type_from(j.at(key).get<std::string>());
  if (!v) throw SchemaError("bad verb type");
  return *v;
}

Voice voice_req(const Json& j, const char* key) {
  auto v = voice_from(j.at(key).get<std::string>());
  if (!v) throw SchemaError("bad voice");
  return *v;
}

const char* kind_name(ComplementSlot::Kind k) {
  switch (k) {
    case ComplementSlot::Kind::Obj: return "Obj";
    case ComplementSlot::Kind::IObj: return "IObj";
    case ComplementSlot::Kind::VComp: return "VComp";
    case ComplementSlot::Kind::SComp: return "SComp";
    case ComplementSlot::Kind::QComp: return "QComp";
    case ComplementSlot::Kind::Adv: return "Adv";
  }
  return "Obj";
}

ComplementSlot::Kind kind_from(const std::string& s) {
  using Kind = ComplementSlot::Kind;
  static const std::pair<const char*, Kind> table[] = {
      {"Obj", Kind::Obj},     {"IObj", Kind::IObj},   {"VComp", Kind::VComp},
      {"SComp", Kind::SComp}, {"QComp", Kind::QComp}, {"Adv", Kind::Adv}};
  for (const auto& [name, k] : table)
    if (s == name) return k;
  throw SchemaError("bad complement kind: " + s);
}

MweClass mwe_from(const std::string& s) {
  static const std::pair<const char*, MweClass> table[] = {
      {"Simple", MweClass::Simple},
      {"Particle", MweClass::Particle},
      {"Reflexive", MweClass::Reflexive},
      {"ParticleParticle", MweClass::ParticleParticle},
      {"ParticleReflexive", MweClass::ParticleReflexive},
      {"ReflexiveParticle", MweClass::ReflexiveParticle},
      {"Unsupported", MweClass::Unsupported}};
  for (const auto& [name, c] : table)
    if (s == name) return c;
  throw SchemaError("bad MWE class: " + s);
}

UnalignedReason reason_from(const std::string& s) {
  if (s == "NoDictEntry") return UnalignedReason::NoDictEntry;
  if (s == "NoFrameTypeMatch") return UnalignedReason::NoFrameTypeMatch;
  if (s == "TargetUnlinearized") return UnalignedReason::TargetUnlinearized;
  throw SchemaError("bad unaligned reason: " + s);
}

}  // namespace

Json to_json(const AnnotatedSentence& s) {
  Json j;
  j["text"] = s.text;
  j["language"] = s.language;
  j["frame"] = s.frame;
  j["lu_lemma"] = s.lu_lemma;
  j["lu_pos"] = s.lu_pos;
  j["target_span"] = Json::array();
  for (const Span& sp : s.target_span) j["target_span"].push_back(span_json(sp));
  j["target_msd"] = s.target_msd;
  j["fe_spans"] = Json::array();
  for (const FESpan& fe : s.fe_spans) {
    Json f;
    f["fe_name"] = fe.fe_name;
    f["span"] = fe.span ? span_json(*fe.span) : Json(nullptr);
    set_opt(f, "raw_phrase_type", fe.raw_phrase_type, [](const std::string& x) { return x; });
    set_opt(f, "raw_gf", fe.raw_gf, [](const std::string& x) { return x; });
    set_opt(f, "head_text", fe.head_text, [](const std::string& x) { return x; });
    f["is_core"] = fe.is_core;
    j["fe_spans"].push_back(std::move(f));
  }
  j["scheme"] = s.scheme == SourceScheme::PhraseStructure ? "ps" : "dep";
  j["source_id"] = s.source_id;
  j["lu_morph"] = morph_json(s.lu_morph_hint);
  j["flags"] = Json::array();
  for (const Diagnostic& d : s.flags)
    j["flags"].push_back({{"code", to_string(d.code)}, {"detail", d.detail}});
  return j;
}

AnnotatedSentence sentence_from_json(const Json& j) {
  AnnotatedSentence s;
  s.text = j.at("text").get<std::string>();
  s.language = j.at("language").get<std::string>();
  s.frame = j.at("frame").get<std::string>();
  s.lu_lemma = j.at("lu_lemma").get<std::string>();
  s.lu_pos = j.at("lu_pos").get<std::string>();
  for (const Json& sp : j.at("target_span")) s.target_span.push_back(span_from(sp));
  s.target_msd = j.at("target_msd").get<std::vector<std::string>>();
  for (const Json& f : j.at("fe_spans")) {
    FESpan fe;
    fe.fe_name = f.at("fe_name").get<std::string>();
    if (!f.at("span").is_null()) fe.span = span_from(f.at("span"));
    fe.raw_phrase_type = opt_str(f, "raw_phrase_type");
    fe.raw_gf = opt_str(f, "raw_gf");
    fe.head_text = opt_str(f, "head_text");
    fe.is_core = f.at("is_core").get<bool>();
    s.fe_spans.push_back(std::move(fe));
  }
  s.scheme = j.at("scheme").get<std::string>() == "dep" ? SourceScheme::Dependency
                                                        : SourceScheme::PhraseStructure;
  s.source_id = j.at("source_id").get<std::string>();
  s.lu_morph_hint = morph_from(j.at("lu_morph"));
  for (const Json& d : j.at("flags"))
    s.flags.push_back({diag_from(d.at("code").get<std::string>()),
                       d.at("detail").get<std::string>()});
  return s;
}

Json to_json(const SentencePattern& p) {
  Json j;
  j["frame"] = p.frame;
  j["verb_type"] = to_string(p.verb_type);
  j["voice"] = to_string(p.voice);
  j["fes"] = Json::array();
  for (const FERealization& fe : p.fes) j["fes"].push_back(fe_realization_json(fe));
  j["lu"] = {{"lemma", p.lu.lemma}, {"pos", p.lu.pos}};
  j["lu_morph"] = morph_json(p.lu_morph);
  j["count"] = p.count;
  return j;
}

SentencePattern sentence_pattern_from_json(const Json& j) {
  SentencePattern p;
  p.frame = j.at("frame").get<std::string>();
  p.verb_type = verb_type_req(j, "verb_type");
  p.voice = voice_req(j, "voice");
  for (const Json& fe : j.at("fes")) p.fes.push_back(fe_realization_from(fe));
  p.lu.lemma = j.at("lu").at("lemma").get<std::string>();
  p.lu.pos = j.at("lu").at("pos").get<std::string>();
  p.lu_morph = morph_from(j.at("lu_morph"));
  p.count = j.at("count").get<int>();
  return p;
}

Json to_json(const ValencePattern& v) {
  Json j;
  j["frame"] = v.frame;
  j["verb_type"] = to_string(v.verb_type);
  j["voice"] = to_string(v.voice);
  j["fes"] = Json::array();
  for (const FETriple& t : v.fes) j["fes"].push_back(triple_json(t));
  j["count"] = v.count;
  j["members"] = Json::array();
  for (const SentencePattern& m : v.members) j["members"].push_back(to_json(m));
  j["top_sentence_pattern"] = to_json(v.top_sentence_pattern);
  return j;
}

ValencePattern valence_pattern_from_json(const Json& j) {
  ValencePattern v;
  v.frame = j.at("frame").get<std::string>();
  v.verb_type = verb_type_req(j, "verb_type");
  v.voice = voice_req(j, "voice");
  for (const Json& t : j.at("fes")) v.fes.push_back(triple_from(t));
  v.count = j.at("count").get<int>();
  for (const Json& m : j.at("members")) v.members.push_back(sentence_pattern_from_json(m));
  v.top_sentence_pattern = sentence_pattern_from_json(j.at("top_sentence_pattern"));
  return v;
}

Json to_json(const SharedSet& s) {
  Json j = Json::array();
  for (const SharedPattern& sp : s.patterns) {
    Json e;
    e["pattern"] = to_json(sp.pattern);
    e["witnesses"] = Json::object();
    for (const auto& [lang, w] : sp.witnesses) e["witnesses"][lang] = to_json(w);
    j.push_back(std::move(e));
  }
  return j;
}

SharedSet shared_set_from_json(const Json& j) {
  SharedSet s;
  for (const Json& e : j) {
    SharedPattern sp;
    sp.pattern = valence_pattern_from_json(e.at("pattern"));
    for (auto it = e.at("witnesses").begin(); it != e.at("witnesses").end(); ++it)
      sp.witnesses[it.key()] = sentence_pattern_from_json(it.value());
    s.patterns.push_back(std::move(sp));
  }
  return s;
}

Json to_json(const Grammar& g) {
  Json j;
  j["functions"] = Json::array();
  for (const FrameFunction& fn : g.functions) {
    Json f;
    f["name"] = fn.name;
    f["frame"] = fn.frame;
    f["args"] = fn.args;
    f["verb_arg"] = to_string(fn.verb_arg);
    f["voice"] = to_string(fn.voice);
    f["fes"] = Json::array();
    for (const FETriple& t : fn.fes) f["fes"].push_back(triple_json(t));
    j["functions"].push_back(std::move(f));
  }
  j["categories"] = g.categories;
  j["ungenerable"] = g.ungenerable;
  j["rules"] = Json::object();
  for (const auto& [lang, rules] : g.rules) {
    Json arr = Json::array();
    for (const ConcreteRule& r : rules) {
      Json rj;
      rj["function"] = r.function;
      rj["verb_type"] = to_string(r.verb_type);
      rj["voice"] = to_string(r.voice);
      rj["args"] = r.args;
      rj["subject_arg"] = r.subject_arg;
      rj["agent_arg"] = r.agent_arg;
      rj["complements"] = Json::array();
      for (const ComplementSlot& c : r.complements)
        rj["complements"].push_back(
            {{"kind", kind_name(c.kind)}, {"arg", c.arg}, {"cat", to_string(c.cat)}});
      arr.push_back(std::move(rj));
    }
    j["rules"][lang] = std::move(arr);
  }
  return j;
}

Grammar grammar_from_json(const Json& j) {
  Grammar g;
  for (const Json& f : j.at("functions")) {
    FrameFunction fn;
    fn.name = f.at("name").get<std::string>();
    fn.frame = f.at("frame").get<std::string>();
    fn.args = f.at("args").get<std::vector<std::string>>();
    fn.verb_arg = verb_type_req(f, "verb_arg");
    fn.voice = voice_req(f, "voice");
    for (const Json& t : f.at("fes")) fn.fes.push_back(triple_from(t));
    g.functions.push_back(std::move(fn));
  }
  g.categories = j.at("categories").get<std::vector<std::string>>();
  g.ungenerable =
      j.at("ungenerable").get<std::map<std::string, std::vector<std::string>>>();
  for (auto it = j.at("rules").begin(); it != j.at("rules").end(); ++it) {
    std::vector<ConcreteRule> rules;
    for (const Json& rj : it.value()) {
      ConcreteRule r;
      r.function = rj.at("function").get<std::string>();
      r.verb_type = verb_type_req(rj, "verb_type");
      r.voice = voice_req(rj, "voice");
      r.args = rj.at("args").get<std::vector<std::string>>();
      r.subject_arg = rj.at("subject_arg").get<std::string>();
      r.agent_arg = rj.at("agent_arg").get<std::string>();
      for (const Json& c : rj.at("complements")) {
        ComplementSlot slot;
        slot.kind = kind_from(c.at("kind").get<std::string>());
        slot.arg = c.at("arg").get<std::string>();
        auto cat = phrase_cat_from(c.at("cat").get<std::string>());
        if (!cat) throw SchemaError("bad complement cat");
        slot.cat = *cat;
        r.complements.push_back(std::move(slot));
      }
      rules.push_back(std::move(r));
    }
    g.rules[it.key()] = std::move(rules);
  }
  return g;
}

Json to_json(const LexEntry& e) {
  Json j;
  j["id"] = e.id;
  j["base_form"] = e.base_form;
  j["verb_type"] = to_string(e.verb_type);
  j["frame"] = e.frame;
  j["lu_morph"] = morph_json(e.lu_morph);
  j["mwe_class"] = to_string(e.mwe_class);
  j["linearization"] = e.linearization ? Json(*e.linearization) : Json(nullptr);
  return j;
}

LexEntry lex_entry_from_json(const Json& j) {
  LexEntry e;
  e.id = j.at("id").get<std::string>();
  e.base_form = j.at("base_form").get<std::string>();
  e.verb_type = verb_type_req(j, "verb_type");
  e.frame = j.at("frame").get<std::string>();
  e.lu_morph = morph_from(j.at("lu_morph"));
  e.mwe_class = mwe_from(j.at("mwe_class").get<std::string>());
  if (!j.at("linearization").is_null())
    e.linearization = j.at("linearization").get<std::string>();
  return e;
}

Json to_json(const AlignmentResult& r) {
  Json j;
  j["aligned"] = Json::array();
  for (const AlignedEntry& a : r.aligned) {
    Json e;
    e["interlingua_id"] = a.interlingua_id;
    e["l1_entry"] = to_json(a.l1_entry);
    e["l2_variants"] = Json::array();
    for (const LexEntry& v : a.l2_variants) e["l2_variants"].push_back(to_json(v));
    e["fallback_used"] = a.fallback_used;
    j["aligned"].push_back(std::move(e));
  }
  j["unaligned"] = Json::array();
  for (const auto& [entry, reason] : r.unaligned)
    j["unaligned"].push_back({{"entry", to_json(entry)}, {"reason", to_string(reason)}});
  return j;
}

AlignmentResult alignment_from_json(const Json& j) {
  AlignmentResult r;
  for (const Json& e : j.at("aligned")) {
    AlignedEntry a;
    a.interlingua_id = e.at("interlingua_id").get<std::string>();
    a.l1_entry = lex_entry_from_json(e.at("l1_entry"));
    for (const Json& v : e.at("l2_variants")) a.l2_variants.push_back(lex_entry_from_json(v));
    a.fallback_used = e.at("fallback_used").get<bool>();
    r.aligned.push_back(std::move(a));
  }
  for (const Json& u : j.at("unaligned"))
    r.unaligned.emplace_back(lex_entry_from_json(u.at("entry")),
                             reason_from(u.at("reason").get<std::string>()));
  return r;
}

Json make_artifact(const std::string& kind, const std::string& settings, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["settings"] = settings;
  j["items"] = std::move(payload);
  return j;
}

Json load_artifact(const std::string& path, const std::string& expected_kind) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open artifact: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("bad JSON in " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version"))
    throw SchemaError("not an artifact: " + path);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw SchemaError("unsupported schema version in " + path);
  if (j.at("kind").get<std::string>() != expected_kind)
    throw SchemaError("expected " + expected_kind + " artifact in " + path +
                      ", found " + j.at("kind").get<std::string>());
  return j;
}

void write_artifact(const std::string& path, const Json& artifact) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write artifact: " + path);
  out << artifact.dump(2) << "\n";
}

std::vector<AnnotatedSentence> sentences_from_artifact(const Json& artifact) {
  std::vector<AnnotatedSentence> xs;
  for (const Json& j : artifact.at("items")) xs.push_back(sentence_from_json(j));
  return xs;
}

std::vector<SentencePattern> sentence_patterns_from_artifact(const Json& artifact) {
  std::vector<SentencePattern> xs;
  for (const Json& j : artifact.at("items")) xs.push_back(sentence_pattern_from_json(j));
  return xs;
}

std::vector<ValencePattern> valence_patterns_from_artifact(const Json& artifact) {
  std::vector<ValencePattern> xs;
  for (const Json& j : artifact.at("items")) xs.push_back(valence_pattern_from_json(j));
  return xs;
}

std::vector<LexEntry> lexicon_from_artifact(const Json& artifact) {
  std::vector<LexEntry> xs;
  for (const Json& j : artifact.at("items")) xs.push_back(lex_entry_from_json(j));
  return xs;
}

namespace {
template <typename T>
Json items_artifact(const char* kind, const std::vector<T>& xs, const std::string& settings) {
  Json items = Json::array();
  for (const T& x : xs) items.push_back(to_json(x));
  return make_artifact(kind, settings, std::move(items));
}
}  // namespace

Json sentences_artifact(const std::vector<AnnotatedSentence>& xs, const std::string& settings) {
  return items_artifact("sentences", xs, settings);
}
Json sentence_patterns_artifact(const std::vector<SentencePattern>& xs, const std::string& settings) {
  return items_artifact("sentence_patterns", xs, settings);
}
Json valence_patterns_artifact(const std::vector<ValencePattern>& xs, const std::string& settings) {
  return items_artifact("valence_patterns", xs, settings);
}
Json lexicon_artifact(const std::vector<LexEntry>& xs, const std::string& settings) {
  return items_artifact("lexicon", xs, settings);
}

}  // namespace fnv
