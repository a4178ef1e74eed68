#ifndef FNVALENCE_LEXICON_ALIGN_HPP
#define FNVALENCE_LEXICON_ALIGN_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fnvalence/lexicon_gen.hpp"

namespace fnv {

// Bilingual lemma map: l1 lemma -> l2 lemmas. TSV rows "lemma1 TAB lemma2".
using BilingualDict = std::multimap<std::string, std::string>;

BilingualDict load_bilingual_dict(std::istream& tsv);
BilingualDict load_bilingual_dict_file(const std::string& path);

struct AlignedEntry {
  std::string interlingua_id;          // the l1 entry id
  LexEntry l1_entry;
  std::vector<LexEntry> l2_variants;   // simple verbs before MWEs, then alphabetical
  bool fallback_used = false;          // l1 MWE matched via its main verb
};

enum class UnalignedReason { NoDictEntry, NoFrameTypeMatch, TargetUnlinearized };

std::string to_string(UnalignedReason r);

struct AlignmentResult {
  std::vector<AlignedEntry> aligned;
  std::vector<std::pair<LexEntry, UnalignedReason>> unaligned;
};

AlignmentResult align(const std::vector<LexEntry>& l1,
                      const std::vector<LexEntry>& l2,
                      const BilingualDict& dict);

struct SharedLexiconText {
  std::string abstract_module;
  std::string l1_concrete;
  std::string l2_concrete;
};

SharedLexiconText gen_shared_lexicon(const std::vector<AlignedEntry>& aligned,
                                     const std::string& module_name,
                                     const std::string& lang1,
                                     const std::string& lang2);

std::string unaligned_report_tsv(const AlignmentResult& result);

}  // namespace fnv

#endif
