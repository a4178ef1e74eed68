#include "fnvalence/lexicon_gen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fnv {

namespace {

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cols.push_back(cur);
  return cols;
}

std::string pos_pattern(const LuMorph& m) {
  std::string s;
  for (const MorphComponent& c : m.components) {
    if (!s.empty()) s += " ";
    s += c.upos;
    if (!c.feats.empty()) s += "." + c.feats;
  }
  return s;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Verb-level expression: paradigm application wrapped per MWE class.
std::optional<std::string> verb_expr(const LexEntry& e, const ParadigmRef& p) {
  std::string core = p.constructor;
  const auto& comps = e.lu_morph.components;
  if (p.argument_forms.empty()) {
    // A bare constructor row means "derive everything from the citation form".
    core += " " + quoted(comps.empty() ? e.base_form : comps[0].text);
  }
  for (const std::string& f : p.argument_forms) core += " " + quoted(f);
  core = "(" + core + ")";

  auto comp_text = [&](std::size_t i) {
    return i < comps.size() ? comps[i].text : std::string{};
  };
  switch (e.mwe_class) {
    case MweClass::Simple:
      return core;
    case MweClass::Particle:
      return "(partV " + core + " " + quoted(comp_text(1)) + ")";
    case MweClass::ParticleParticle:
      return "(partV (partV " + core + " " + quoted(comp_text(1)) + ") " +
             quoted(comp_text(2)) + ")";
    case MweClass::Reflexive:
      return "(reflV " + core + ")";
    case MweClass::ParticleReflexive:
      return "(reflV (partV " + core + " " + quoted(comp_text(1)) + "))";
    case MweClass::ReflexiveParticle:
      return "(partV (reflV " + core + ") " + quoted(comp_text(2)) + ")";
    case MweClass::Unsupported:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string type_wrapper(VerbType t) {
  switch (t) {
    case VerbType::V: return "";
    case VerbType::V2: return "mkV2";
    case VerbType::V3: return "mkV3";
    case VerbType::VV: return "mkVV";
    case VerbType::VS: return "mkVS";
    case VerbType::VQ: return "mkVQ";
    case VerbType::V2V: return "mkV2V";
    case VerbType::V2S: return "mkV2S";
    case VerbType::V2Q: return "mkV2Q";
  }
  return "";
}

}  // namespace

std::string to_string(MweClass c) {
  switch (c) {
    case MweClass::Simple: return "Simple";
    case MweClass::Particle: return "Particle";
    case MweClass::Reflexive: return "Reflexive";
    case MweClass::ParticleParticle: return "ParticleParticle";
    case MweClass::ParticleReflexive: return "ParticleReflexive";
    case MweClass::ReflexiveParticle: return "ReflexiveParticle";
    case MweClass::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

MweClass classify_mwe(const LuMorph& m) {
  std::vector<std::string> seq;
  for (const MorphComponent& c : m.components) {
    std::string tag = c.upos;
    if (!c.feats.empty()) tag += "." + c.feats;
    seq.push_back(tag);
  }
  if (seq.empty()) return MweClass::Unsupported;
  if (seq[0] != "VERB.Fin") return MweClass::Unsupported;
  if (seq.size() == 1) return MweClass::Simple;
  if (seq.size() == 2) {
    if (seq[1] == "ADP") return MweClass::Particle;
    if (seq[1] == "PRON.Reflex") return MweClass::Reflexive;
    return MweClass::Unsupported;
  }
  if (seq.size() == 3) {
    if (seq[1] == "ADP" && seq[2] == "ADP") return MweClass::ParticleParticle;
    if (seq[1] == "ADP" && seq[2] == "PRON.Reflex") return MweClass::ParticleReflexive;
    if (seq[1] == "PRON.Reflex" && seq[2] == "ADP") return MweClass::ReflexiveParticle;
  }
  return MweClass::Unsupported;
}

std::string lemma_identifier(const std::string& base_form) {
  std::string out = base_form;
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

std::vector<LexEntry> collect_lexicon(const SharedSet& shared,
                                      const std::vector<SentencePattern>& sentence_patterns,
                                      const std::string& language) {
  (void)language;
  std::map<std::string, LexEntry> entries;
  for (const SentencePattern& p : sentence_patterns) {
    // only verbs whose usage the shared set accounts for
    if (compute_coverage(shared, {p}) <= 0.0) continue;
    LexEntry e;
    e.base_form = p.lu_morph.base_form.empty() ? p.lu.lemma : p.lu_morph.base_form;
    e.verb_type = p.verb_type;
    e.frame = p.frame;
    e.lu_morph = p.lu_morph;
    if (e.lu_morph.components.empty()) {
      // bare lemma: assume a simple finite verb
      e.lu_morph.base_form = e.base_form;
      e.lu_morph.components.push_back({e.base_form, "VERB", "Fin"});
    }
    e.mwe_class = classify_mwe(e.lu_morph);
    e.id = lemma_identifier(e.base_form) + "_" + to_string(e.verb_type) + "_" + e.frame;
    entries.emplace(e.id, std::move(e));
  }
  std::vector<LexEntry> out;
  out.reserve(entries.size());
  for (auto& [id, e] : entries) out.push_back(std::move(e));
  return out;
}

std::map<std::string, ParadigmRef> load_paradigm_stream(std::istream& tsv, int priority,
                                                        std::map<std::string, ParadigmRef> into,
                                                        std::vector<std::string>* warnings) {
  std::string line;
  int lineno = 0;
  while (std::getline(tsv, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tab(line);
    if (cols.size() < 2 || cols[0].empty() || cols[1].empty()) {
      if (warnings)
        warnings->push_back("paradigms: bad row at line " + std::to_string(lineno));
      continue;
    }
    ParadigmRef ref;
    ref.constructor = cols[1];
    ref.argument_forms.assign(cols.begin() + 2, cols.end());
    ref.source_priority = priority;
    auto it = into.find(cols[0]);
    if (it == into.end() || it->second.source_priority <= priority)
      into[cols[0]] = std::move(ref);
  }
  return into;
}

std::map<std::string, ParadigmRef> load_paradigms(const std::vector<std::string>& paths,
                                                  std::vector<std::string>* warnings) {
  std::map<std::string, ParadigmRef> out;
  int priority = 0;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) {
      if (warnings) warnings->push_back("paradigms: cannot open " + path);
      ++priority;
      continue;
    }
    out = load_paradigm_stream(in, priority++, std::move(out), warnings);
  }
  return out;
}

LexiconReport gen_concrete_lexicon(std::vector<LexEntry>& entries,
                                   const std::map<std::string, ParadigmRef>& paradigms) {
  LexiconReport report;
  for (LexEntry& e : entries) {
    ++report.total;
    if (e.mwe_class == MweClass::Unsupported) {
      report.gaps.push_back({e.id, "unsupported-mwe", pos_pattern(e.lu_morph)});
      continue;
    }
    std::string main = e.lu_morph.components.empty() ? e.base_form
                                                     : e.lu_morph.components[0].text;
    auto it = paradigms.find(main);
    if (it == paradigms.end()) {
      report.gaps.push_back({e.id, "no-paradigm", main});
      continue;
    }
    auto verb = verb_expr(e, it->second);
    if (!verb) {
      report.gaps.push_back({e.id, "unsupported-mwe", pos_pattern(e.lu_morph)});
      continue;
    }
    std::string wrap = type_wrapper(e.verb_type);
    e.linearization = wrap.empty() ? verb->substr(1, verb->size() - 2)
                                   : wrap + " " + *verb;
    ++report.linearized;
  }
  return report;
}

std::string lexicon_abstract_text(const std::vector<LexEntry>& entries,
                                  const std::string& module_name) {
  std::ostringstream os;
  os << "abstract " << module_name << " = {\n\n  fun\n";
  for (const LexEntry& e : entries)
    os << "    " << e.id << " : " << to_string(e.verb_type) << " ;\n";
  os << "}\n";
  return os.str();
}

std::string lexicon_concrete_text(const std::vector<LexEntry>& entries,
                                  const std::string& module_name,
                                  const std::string& language) {
  std::string suffix = capitalize(language);
  std::ostringstream os;
  os << "concrete " << module_name << suffix << " of " << module_name
     << " = open Paradigms" << suffix << " in {\n\n  lin\n";
  for (const LexEntry& e : entries) {
    if (!e.linearization) continue;  // gap: reported, not emitted
    os << "    " << e.id << " = " << *e.linearization << " ;\n";
  }
  os << "}\n";
  return os.str();
}

std::string gap_report_tsv(const LexiconReport& report) {
  std::ostringstream os;
  os << "entry\treason\tdetail\n";
  for (const auto& g : report.gaps)
    os << g[0] << "\t" << g[1] << "\t" << g[2] << "\n";
  return os.str();
}

}  // namespace fnv
