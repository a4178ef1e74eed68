#include "fnvalence/pattern_normalize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fnv {

namespace {

// Adv slots with no marker; used as a tie-break when picking the
// representative sentence pattern.
int absent_adv_markers(const SentencePattern& p) {
  int n = 0;
  for (const FERealization& fe : p.fes)
    if (fe.cat == PhraseCat::Adv && !fe.marker) ++n;
  return n;
}

std::string shape_key(const SentencePattern& p) {
  std::string s;
  for (const FERealization& fe : p.fes) {
    if (!s.empty()) s += " ";
    s += fe_key(fe, true, true);
  }
  return s;
}

}  // namespace

std::vector<ValencePattern> normalize(const std::vector<SentencePattern>& patterns) {
  std::map<std::string, ValencePattern> grouped;
  for (const SentencePattern& p : patterns) {
    ValencePattern key;
    key.frame = p.frame;
    key.verb_type = p.verb_type;
    key.voice = p.voice;
    bool complete = true;
    for (const FERealization& fe : p.fes) {
      if (!fe.cat) {  // raw label never generalized; cannot normalize
        complete = false;
        break;
      }
      FETriple t{fe.fe_name, *fe.cat, fe.rel};
      if (std::find(key.fes.begin(), key.fes.end(), t) == key.fes.end())
        key.fes.push_back(t);
    }
    if (!complete) continue;
    std::sort(key.fes.begin(), key.fes.end(),
              [](const FETriple& a, const FETriple& b) {
                return serialize(a) < serialize(b);
              });
    auto& v = grouped.try_emplace(serialize(key), std::move(key)).first->second;
    v.count += p.count;

    // merge into a shape-identical member, collapsing the LU distinction
    std::string shape = shape_key(p);
    auto member = std::find_if(v.members.begin(), v.members.end(),
                               [&](const SentencePattern& m) {
                                 return shape_key(m) == shape;
                               });
    if (member == v.members.end())
      v.members.push_back(p);
    else
      member->count += p.count;
  }

  std::vector<ValencePattern> out;
  out.reserve(grouped.size());
  for (auto& [key, v] : grouped) {
    std::sort(v.members.begin(), v.members.end(),
              [](const SentencePattern& a, const SentencePattern& b) {
                if (a.count != b.count) return a.count > b.count;
                int ma = absent_adv_markers(a), mb = absent_adv_markers(b);
                if (ma != mb) return ma < mb;
                return shape_key(a) < shape_key(b);
              });
    v.top_sentence_pattern = v.members.front();
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const ValencePattern& a, const ValencePattern& b) {
              if (a.count != b.count) return a.count > b.count;
              return serialize(a) < serialize(b);
            });
  return out;
}

std::vector<ValencePattern> prune_singletons(std::vector<ValencePattern> valences) {
  std::set<std::string> frames_with_repeats;
  for (const ValencePattern& v : valences)
    if (v.count > 1) frames_with_repeats.insert(v.frame);
  std::erase_if(valences, [&](const ValencePattern& v) {
    return v.count == 1 && frames_with_repeats.count(v.frame);
  });
  return valences;
}

std::string summarize(const std::vector<ValencePattern>& valences,
                      const std::string& frame,
                      const SummarizeOptions& opts) {
  std::ostringstream os;
  for (Voice voice : {Voice::Act, Voice::Pass}) {
    std::vector<const ValencePattern*> vs;
    int total = 0;
    for (const ValencePattern& v : valences) {
      if (v.frame != frame || v.voice != voice) continue;
      vs.push_back(&v);
      total += v.count;
    }
    if (vs.empty()) continue;
    // tie-break on the rendered FE line, not the full serialization, so the
    // verb type does not leak into the display order
    auto fe_line = [](const ValencePattern& v) {
      std::string line;
      for (const FETriple& t : v.fes) {
        if (!line.empty()) line += " ";
        line += serialize(t);
      }
      return line;
    };
    std::sort(vs.begin(), vs.end(),
              [&](const ValencePattern* a, const ValencePattern* b) {
                if (a->count != b->count) return a->count > b->count;
                return fe_line(*a) < fe_line(*b);
              });
    os << to_string(voice) << " : " << total << "\n";
    bool valences_elided = false;
    for (const ValencePattern* v : vs) {
      if (v->count < opts.min_valence_count) {
        valences_elided = true;
        continue;
      }
      std::string line;
      for (const FETriple& t : v->fes) {
        if (!line.empty()) line += " ";
        line += serialize(t);
      }
      os << "  " << line << " : " << v->count << "\n";
      std::vector<const SentencePattern*> ms;
      for (const SentencePattern& m : v->members) ms.push_back(&m);
      std::sort(ms.begin(), ms.end(),
                [](const SentencePattern* a, const SentencePattern* b) {
                  if (a->count != b->count) return a->count > b->count;
                  return shape_key(*a) < shape_key(*b);
                });
      bool members_elided = false;
      for (const SentencePattern* m : ms) {
        if (m->count < opts.min_member_count) {
          members_elided = true;
          continue;
        }
        os << "    " << shape_key(*m) << " : " << m->count << "\n";
      }
      if (members_elided) os << "    ...\n";
    }
    if (valences_elided) os << "  ...\n";
  }
  return os.str();
}

RunStats run_stats(const std::vector<ValencePattern>& valences,
                   const std::vector<SentencePattern>& sentence_patterns,
                   const std::string& settings_label) {
  RunStats st;
  st.settings = settings_label;
  std::set<std::string> frames, lus;
  for (const ValencePattern& v : valences) frames.insert(v.frame);
  for (const SentencePattern& p : sentence_patterns) {
    lus.insert(p.lu.lemma + "@" + p.frame);
    st.examples += p.count;
  }
  st.frames = static_cast<int>(frames.size());
  st.lus = static_cast<int>(lus.size());
  st.valence_patterns = static_cast<int>(valences.size());
  st.sentence_patterns = static_cast<int>(sentence_patterns.size());
  return st;
}

std::string stats_tsv_row(const RunStats& s, bool with_header) {
  std::ostringstream os;
  if (with_header)
    os << "settings\tframes\tlus\tsentence_patterns\tvalence_patterns\texamples\n";
  os << s.settings << "\t" << s.frames << "\t" << s.lus << "\t"
     << s.sentence_patterns << "\t" << s.valence_patterns << "\t" << s.examples
     << "\n";
  return os.str();
}

}  // namespace fnv
