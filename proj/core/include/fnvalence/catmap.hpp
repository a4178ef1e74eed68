#ifndef FNVALENCE_CATMAP_HPP
#define FNVALENCE_CATMAP_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "fnvalence/types.hpp"

namespace fnv {

// Result of generalizing a scheme-specific label to an RGL type.
struct Generalized {
  PhraseCat cat;
  std::optional<std::string> marker;  // preposition/case for Adv
  bool that_clause = false;           // S admits a "that"-paraphrase
};

struct Unsupported {
  std::string label;  // echoed for audit
};

using CatResult = std::variant<Generalized, Unsupported>;

// Raw label -> RGL category mapping, one table per annotation scheme.
// Shipped as TSV data so corpus-specific repairs stay auditable:
//   scheme <TAB> raw_label <TAB> cat|unsupported [<TAB> flag,...]
// flags: bracket-marker (PP[for] style), head-marker (marker = head token),
// that (S paraphrasable with "that").
class CatMap {
 public:
  static CatMap load(std::istream& tsv);
  static CatMap load_file(const std::string& path);

  // generalize_cat. For PhraseStructure, labels like "PP[for]" fall back to
  // their bracket-free base entry and extract the marker. For Dependency,
  // msd labels like "VB.INF.AKT" fall back on successively shorter
  // dot-prefixes; head_text supplies head-marker values.
  CatResult generalize(const std::string& raw_label, SourceScheme scheme,
                       const std::optional<std::string>& head_text = std::nullopt) const;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::optional<PhraseCat> cat;  // nullopt = explicitly unsupported
    bool bracket_marker = false;
    bool head_marker = false;
    bool that_clause = false;
  };
  std::map<std::pair<SourceScheme, std::string>, Entry> entries_;
};

}  // namespace fnv

#endif
