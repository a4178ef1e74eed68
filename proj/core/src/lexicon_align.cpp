#include "fnvalence/lexicon_align.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fnv {

namespace {

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string main_verb(const LexEntry& e) {
  return e.lu_morph.components.empty() ? e.base_form : e.lu_morph.components[0].text;
}

std::set<std::string> translations(const BilingualDict& dict, const std::string& lemma) {
  std::set<std::string> out;
  auto [lo, hi] = dict.equal_range(lemma);
  for (auto it = lo; it != hi; ++it) out.insert(it->second);
  return out;
}

}  // namespace

std::string to_string(UnalignedReason r) {
  switch (r) {
    case UnalignedReason::NoDictEntry: return "NoDictEntry";
    case UnalignedReason::NoFrameTypeMatch: return "NoFrameTypeMatch";
    case UnalignedReason::TargetUnlinearized: return "TargetUnlinearized";
  }
  return "Unknown";
}

BilingualDict load_bilingual_dict(std::istream& tsv) {
  BilingualDict dict;
  std::string line;
  while (std::getline(tsv, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    dict.emplace(line.substr(0, tab), line.substr(tab + 1));
  }
  return dict;
}

BilingualDict load_bilingual_dict_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("dict: cannot open " + path);
  return load_bilingual_dict(in);
}

AlignmentResult align(const std::vector<LexEntry>& l1,
                      const std::vector<LexEntry>& l2,
                      const BilingualDict& dict) {
  AlignmentResult result;
  for (const LexEntry& e1 : l1) {
    bool fallback = false;
    std::set<std::string> targets = translations(dict, e1.base_form);
    if (targets.empty() && e1.lu_morph.components.size() > 1) {
      // MWE not in the dictionary as a whole: try its head verb
      targets = translations(dict, main_verb(e1));
      fallback = true;
    }
    if (targets.empty()) {
      result.unaligned.emplace_back(e1, UnalignedReason::NoDictEntry);
      continue;
    }

    std::vector<const LexEntry*> linearized, unlinearized;
    for (const LexEntry& e2 : l2) {
      if (e2.frame != e1.frame || e2.verb_type != e1.verb_type) continue;
      if (!targets.count(e2.base_form) && !targets.count(main_verb(e2))) continue;
      (e2.linearization ? linearized : unlinearized).push_back(&e2);
    }
    if (linearized.empty()) {
      result.unaligned.emplace_back(e1, unlinearized.empty()
                                            ? UnalignedReason::NoFrameTypeMatch
                                            : UnalignedReason::TargetUnlinearized);
      continue;
    }

    std::sort(linearized.begin(), linearized.end(),
              [](const LexEntry* a, const LexEntry* b) {
                bool sa = a->mwe_class == MweClass::Simple;
                bool sb = b->mwe_class == MweClass::Simple;
                if (sa != sb) return sa;  // simple verbs first
                return a->id < b->id;
              });
    AlignedEntry out;
    out.interlingua_id = e1.id;
    out.l1_entry = e1;
    for (const LexEntry* e2 : linearized) out.l2_variants.push_back(*e2);
    out.fallback_used = fallback;
    result.aligned.push_back(std::move(out));
  }
  return result;
}

SharedLexiconText gen_shared_lexicon(const std::vector<AlignedEntry>& aligned,
                                     const std::string& module_name,
                                     const std::string& lang1,
                                     const std::string& lang2) {
  SharedLexiconText out;
  {
    std::ostringstream os;
    os << "abstract " << module_name << " = {\n\n  fun\n";
    for (const AlignedEntry& a : aligned)
      os << "    " << a.interlingua_id << " : " << to_string(a.l1_entry.verb_type)
         << " ;\n";
    os << "}\n";
    out.abstract_module = os.str();
  }
  auto concrete = [&](const std::string& lang, auto line) {
    std::string suffix = capitalize(lang);
    std::ostringstream os;
    os << "concrete " << module_name << suffix << " of " << module_name
       << " = open Lexicon" << suffix << " in {\n\n  lin\n";
    for (const AlignedEntry& a : aligned) os << "    " << line(a) << " ;\n";
    os << "}\n";
    return os.str();
  };
  out.l1_concrete = concrete(lang1, [](const AlignedEntry& a) {
    return a.interlingua_id + " = " + a.l1_entry.id;
  });
  out.l2_concrete = concrete(lang2, [](const AlignedEntry& a) {
    if (a.l2_variants.size() == 1)
      return a.interlingua_id + " = " + a.l2_variants[0].id;
    std::string s = a.interlingua_id + " = variants {";
    for (std::size_t i = 0; i < a.l2_variants.size(); ++i)
      s += (i ? " | " : "") + a.l2_variants[i].id;
    return s + "}";
  });
  return out;
}

std::string unaligned_report_tsv(const AlignmentResult& result) {
  std::ostringstream os;
  os << "entry\treason\n";
  for (const auto& [e, reason] : result.unaligned)
    os << e.id << "\t" << to_string(reason) << "\n";
  return os.str();
}

}  // namespace fnv
