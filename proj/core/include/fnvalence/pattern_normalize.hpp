#ifndef FNVALENCE_PATTERN_NORMALIZE_HPP
#define FNVALENCE_PATTERN_NORMALIZE_HPP

#include <string>
#include <vector>

#include "fnvalence/types.hpp"

namespace fnv {

// Group sentence patterns into normalized valence patterns; key is
// (frame, verb_type, voice, FE triple set). Counts aggregate; the top
// sentence pattern is the most frequent member, ties broken by fewest
// absent Adv markers, then lexicographic serialization.
std::vector<ValencePattern> normalize(const std::vector<SentencePattern>& patterns);

// Settings 3.x: within each frame drop count==1 patterns, but only if the
// frame has at least one pattern used more than once.
std::vector<ValencePattern> prune_singletons(std::vector<ValencePattern> valences);

// Display thresholds for summarize. Items below a minimum count are
// folded into a trailing "..." line at the corresponding indent; the
// defaults show everything.
struct SummarizeOptions {
  int min_valence_count = 0;
  int min_member_count = 0;
};

// Indented frame summary: Voice -> ValencePattern -> SentencePattern tree,
// two spaces per level, " : count" suffix. Valence FEs alphabetical,
// sentence FEs in surface order, both levels in descending count order.
std::string summarize(const std::vector<ValencePattern>& valences,
                      const std::string& frame,
                      const SummarizeOptions& opts = {});

struct RunStats {
  std::string settings;
  int frames = 0;
  int lus = 0;
  int valence_patterns = 0;
  int sentence_patterns = 0;
  int examples = 0;
};

RunStats run_stats(const std::vector<ValencePattern>& valences,
                   const std::vector<SentencePattern>& sentence_patterns,
                   const std::string& settings_label);

// One TSV row of corpus-level counts (with header on demand).
std::string stats_tsv_row(const RunStats& s, bool with_header = false);

}  // namespace fnv

#endif
