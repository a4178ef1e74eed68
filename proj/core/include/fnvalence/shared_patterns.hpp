#ifndef FNVALENCE_SHARED_PATTERNS_HPP
#define FNVALENCE_SHARED_PATTERNS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fnvalence/types.hpp"

namespace fnv {

// true iff a and b agree on frame/verb type/voice and b's FE triples are a
// subset of a's (grammatical types and relations included).
bool subsumes(const ValencePattern& a, const ValencePattern& b);

struct SharedPattern {
  ValencePattern pattern;  // language-neutral; count unused
  // language code -> witness: the equal-or-subsuming source pattern's top
  // sentence pattern, smallest FE superset first, then highest count.
  std::map<std::string, SentencePattern> witnesses;
};

struct SharedSet {
  std::vector<SharedPattern> patterns;  // antichain under subsumption
  std::set<std::string> frames() const;
};

SharedSet shared_set(const std::vector<ValencePattern>& fn1, const std::string& lang1,
                     const std::vector<ValencePattern>& fn2, const std::string& lang2);

struct FrameSetStats {
  int n1 = 0, n2 = 0;
  int only1 = 0, only2 = 0;
  int unioned = 0, intersected = 0;
};

FrameSetStats frame_set_stats(const std::vector<ValencePattern>& fn1,
                              const std::vector<ValencePattern>& fn2);

// Fraction of examples (weighted by counts) whose normalized projection
// (core FEs, no markers/order; relations and voice kept) is subsumed by a
// shared pattern. Zero examples -> 0.
double compute_coverage(const SharedSet& shared,
                        const std::vector<SentencePattern>& sentence_patterns);

// Shared frames that contribute no shared pattern (reported, not repaired).
std::set<std::string> frames_without_shared_patterns(
    const SharedSet& shared, const std::vector<ValencePattern>& fn1,
    const std::vector<ValencePattern>& fn2);

}  // namespace fnv

#endif
