#include "fnvalence/shared_patterns.hpp"

#include <algorithm>

namespace fnv {

namespace {

bool triple_subset(const std::vector<FETriple>& sub,
                   const std::vector<FETriple>& super) {
  for (const FETriple& t : sub)
    if (std::find(super.begin(), super.end(), t) == super.end()) return false;
  return true;
}

// Core-FE projection of a sentence pattern: the key used when checking a
// pattern against the shared set.
std::optional<ValencePattern> project(const SentencePattern& p) {
  ValencePattern v;
  v.frame = p.frame;
  v.verb_type = p.verb_type;
  v.voice = p.voice;
  for (const FERealization& fe : p.fes) {
    if (!fe.is_core) continue;
    if (!fe.cat) return std::nullopt;
    FETriple t{fe.fe_name, *fe.cat, fe.rel};
    if (std::find(v.fes.begin(), v.fes.end(), t) == v.fes.end())
      v.fes.push_back(t);
  }
  std::sort(v.fes.begin(), v.fes.end(), [](const FETriple& a, const FETriple& b) {
    return serialize(a) < serialize(b);
  });
  return v;
}

const ValencePattern* pick_witness(const std::vector<ValencePattern>& fn,
                                   const ValencePattern& p) {
  const ValencePattern* best = nullptr;
  for (const ValencePattern& cand : fn) {
    if (!subsumes(cand, p)) continue;
    if (!best) {
      best = &cand;
      continue;
    }
    if (cand.fes.size() != best->fes.size()) {
      if (cand.fes.size() < best->fes.size()) best = &cand;
      continue;
    }
    if (cand.count != best->count) {
      if (cand.count > best->count) best = &cand;
      continue;
    }
    if (serialize(cand) < serialize(*best)) best = &cand;
  }
  return best;
}

}  // namespace

bool subsumes(const ValencePattern& a, const ValencePattern& b) {
  return a.frame == b.frame && a.verb_type == b.verb_type &&
         a.voice == b.voice && triple_subset(b.fes, a.fes);
}

std::set<std::string> SharedSet::frames() const {
  std::set<std::string> out;
  for (const SharedPattern& p : patterns) out.insert(p.pattern.frame);
  return out;
}

SharedSet shared_set(const std::vector<ValencePattern>& fn1, const std::string& lang1,
                     const std::vector<ValencePattern>& fn2, const std::string& lang2) {
  // A pattern is a candidate when the other language has an equal or more
  // general pattern for it.
  std::map<std::string, ValencePattern> candidates;
  auto gather = [&](const std::vector<ValencePattern>& own,
                    const std::vector<ValencePattern>& other) {
    for (const ValencePattern& p : own)
      for (const ValencePattern& q : other)
        if (subsumes(q, p)) {
          candidates.emplace(serialize(p), p);
          break;
        }
  };
  gather(fn1, fn2);
  gather(fn2, fn1);

  SharedSet out;
  for (const auto& [key, p] : candidates) {
    // keep only the most general candidates (antichain)
    bool dominated = false;
    for (const auto& [okey, q] : candidates)
      if (okey != key && subsumes(q, p) && !subsumes(p, q)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    SharedPattern sp;
    sp.pattern.frame = p.frame;
    sp.pattern.verb_type = p.verb_type;
    sp.pattern.voice = p.voice;
    sp.pattern.fes = p.fes;
    if (const ValencePattern* w = pick_witness(fn1, p))
      sp.witnesses[lang1] = w->top_sentence_pattern;
    if (const ValencePattern* w = pick_witness(fn2, p))
      sp.witnesses[lang2] = w->top_sentence_pattern;
    out.patterns.push_back(std::move(sp));
  }
  std::sort(out.patterns.begin(), out.patterns.end(),
            [](const SharedPattern& a, const SharedPattern& b) {
              return serialize(a.pattern) < serialize(b.pattern);
            });
  return out;
}

FrameSetStats frame_set_stats(const std::vector<ValencePattern>& fn1,
                              const std::vector<ValencePattern>& fn2) {
  std::set<std::string> f1, f2;
  for (const ValencePattern& v : fn1) f1.insert(v.frame);
  for (const ValencePattern& v : fn2) f2.insert(v.frame);
  FrameSetStats st;
  st.n1 = static_cast<int>(f1.size());
  st.n2 = static_cast<int>(f2.size());
  std::set<std::string> u = f1;
  u.insert(f2.begin(), f2.end());
  st.unioned = static_cast<int>(u.size());
  int both = 0;
  for (const std::string& f : f1)
    if (f2.count(f)) ++both;
  st.intersected = both;
  st.only1 = st.n1 - both;
  st.only2 = st.n2 - both;
  return st;
}

double compute_coverage(const SharedSet& shared,
                        const std::vector<SentencePattern>& sentence_patterns) {
  long total = 0, covered = 0;
  for (const SentencePattern& p : sentence_patterns) {
    total += p.count;
    auto proj = project(p);
    if (!proj) continue;
    for (const SharedPattern& sp : shared.patterns)
      if (subsumes(sp.pattern, *proj)) {
        covered += p.count;
        break;
      }
  }
  return total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total);
}

std::set<std::string> frames_without_shared_patterns(
    const SharedSet& shared, const std::vector<ValencePattern>& fn1,
    const std::vector<ValencePattern>& fn2) {
  std::set<std::string> f1, f2, have = shared.frames(), out;
  for (const ValencePattern& v : fn1) f1.insert(v.frame);
  for (const ValencePattern& v : fn2) f2.insert(v.frame);
  for (const std::string& f : f1)
    if (f2.count(f) && !have.count(f)) out.insert(f);
  return out;
}

}  // namespace fnv
