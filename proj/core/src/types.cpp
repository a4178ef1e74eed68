#include "fnvalence/types.hpp"

#include <algorithm>
#include <sstream>

namespace fnv {

std::string to_string(Diag d) {
  switch (d) {
    case Diag::OverlappingFEs: return "OverlappingFEs";
    case Diag::MissingTarget: return "MissingTarget";
    case Diag::MissingLU: return "MissingLU";
    case Diag::UnsupportedRealization: return "UnsupportedRealization";
    case Diag::RepeatedFEDifferentTypes: return "RepeatedFEDifferentTypes";
    case Diag::SpanRepaired: return "SpanRepaired";
    case Diag::AmbiguousHead: return "AmbiguousHead";
    case Diag::DepheadOutOfRange: return "DepheadOutOfRange";
    case Diag::SpanOutOfBounds: return "SpanOutOfBounds";
    case Diag::IrreconcilableLabels: return "IrreconcilableLabels";
    case Diag::UnknownVerbType: return "UnknownVerbType";
  }
  return "Unknown";
}

std::string to_string(PhraseCat c) {
  switch (c) {
    case PhraseCat::NP: return "NP";
    case PhraseCat::VP: return "VP";
    case PhraseCat::Adv: return "Adv";
    case PhraseCat::S: return "S";
    case PhraseCat::QS: return "QS";
  }
  return "?";
}

std::string to_string(VerbType t) {
  switch (t) {
    case VerbType::V: return "V";
    case VerbType::V2: return "V2";
    case VerbType::V3: return "V3";
    case VerbType::VV: return "VV";
    case VerbType::VS: return "VS";
    case VerbType::VQ: return "VQ";
    case VerbType::V2V: return "V2V";
    case VerbType::V2S: return "V2S";
    case VerbType::V2Q: return "V2Q";
  }
  return "?";
}

std::string to_string(GrammRel r) {
  switch (r) {
    case GrammRel::nsubj: return "nsubj";
    case GrammRel::nsubjpass: return "nsubjpass";
    case GrammRel::dobj: return "dobj";
    case GrammRel::iobj: return "iobj";
  }
  return "?";
}

std::string to_string(Voice v) { return v == Voice::Act ? "Act" : "Pass"; }

std::optional<PhraseCat> phrase_cat_from(const std::string& s) {
  if (s == "NP") return PhraseCat::NP;
  if (s == "VP") return PhraseCat::VP;
  if (s == "Adv") return PhraseCat::Adv;
  if (s == "S") return PhraseCat::S;
  if (s == "QS") return PhraseCat::QS;
  return std::nullopt;
}

std::optional<VerbType> verb_type_from(const std::string& s) {
  static const std::pair<const char*, VerbType> table[] = {
      {"V", VerbType::V},     {"V2", VerbType::V2},   {"V3", VerbType::V3},
      {"VV", VerbType::VV},   {"VS", VerbType::VS},   {"VQ", VerbType::VQ},
      {"V2V", VerbType::V2V}, {"V2S", VerbType::V2S}, {"V2Q", VerbType::V2Q}};
  for (const auto& [name, t] : table)
    if (s == name) return t;
  return std::nullopt;
}

std::optional<GrammRel> gramm_rel_from(const std::string& s) {
  if (s == "nsubj") return GrammRel::nsubj;
  if (s == "nsubjpass") return GrammRel::nsubjpass;
  if (s == "dobj") return GrammRel::dobj;
  if (s == "iobj") return GrammRel::iobj;
  return std::nullopt;
}

std::optional<Voice> voice_from(const std::string& s) {
  if (s == "Act") return Voice::Act;
  if (s == "Pass") return Voice::Pass;
  return std::nullopt;
}

std::string Settings::str() const {
  std::string s = std::to_string(level) + ".";
  switch (sub) {
    case Sub::None: s += "0"; break;
    case Sub::A: s += "A"; break;
    case Sub::B: s += "B"; break;
  }
  return s;
}

std::optional<Settings> Settings::parse(const std::string& s) {
  if (s.size() != 3 || s[1] != '.') return std::nullopt;
  if (s[0] < '0' || s[0] > '3') return std::nullopt;
  Settings out;
  out.level = s[0] - '0';
  switch (s[2]) {
    case '0': out.sub = Sub::None; break;
    case 'A': out.sub = Sub::A; break;
    case 'B': out.sub = Sub::B; break;
    default: return std::nullopt;
  }
  return out;
}

std::string fe_key(const FERealization& fe, bool generalized, bool with_marker) {
  std::string s = fe.fe_name + "/";
  if (generalized && fe.cat) {
    s += to_string(*fe.cat);
    if (fe.rel) s += "." + to_string(*fe.rel);
    if (with_marker && fe.marker) s += "[" + *fe.marker + "]";
  } else {
    s += fe.raw_label;
    if (fe.raw_label.empty()) s += "?";
    if (fe.rel) s += "." + to_string(*fe.rel);
  }
  return s;
}

std::string serialize(const SentencePattern& p, bool generalized) {
  std::ostringstream os;
  os << p.frame << "/" << to_string(p.verb_type) << "(" << to_string(p.voice) << ")";
  for (const auto& fe : p.fes) os << " " << fe_key(fe, generalized, true);
  os << " @" << p.lu.lemma;
  return os.str();
}

std::string serialize(const FETriple& t) {
  std::string s = t.fe_name + "/" + to_string(t.cat);
  if (t.rel) s += "." + to_string(*t.rel);
  return s;
}

std::string serialize(const ValencePattern& v) {
  std::ostringstream os;
  os << v.frame << "/" << to_string(v.verb_type) << "(" << to_string(v.voice) << ")";
  for (const auto& t : v.fes) os << " " << serialize(t);
  return os.str();
}

}  // namespace fnv
