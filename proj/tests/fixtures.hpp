// Shared fixture builders for the unit and acceptance suites: small pattern
// constructors, seeded random pattern generators, and loaders for the
// bundled sample corpora.
#ifndef FNVALENCE_TESTS_FIXTURES_HPP
#define FNVALENCE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fnvalence/catmap.hpp"
#include "fnvalence/corpus_ingest.hpp"
#include "fnvalence/pattern_extract.hpp"
#include "fnvalence/pattern_normalize.hpp"
#include "fnvalence/shared_patterns.hpp"
#include "fnvalence/types.hpp"

#ifndef FNV_DATA_DIR
#define FNV_DATA_DIR "data"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(FNV_DATA_DIR) + "/" + name;
}

inline fnv::FETriple triple(const std::string& fe, fnv::PhraseCat cat,
                            std::optional<fnv::GrammRel> rel = std::nullopt) {
  return fnv::FETriple{fe, cat, rel};
}

inline fnv::ValencePattern valence(const std::string& frame, fnv::VerbType vt,
                                   fnv::Voice voice,
                                   std::vector<fnv::FETriple> fes,
                                   int count = 1) {
  fnv::ValencePattern v;
  v.frame = frame;
  v.verb_type = vt;
  v.voice = voice;
  v.fes = std::move(fes);
  std::sort(v.fes.begin(), v.fes.end(),
            [](const fnv::FETriple& a, const fnv::FETriple& b) {
              return fnv::serialize(a) < fnv::serialize(b);
            });
  v.count = count;
  return v;
}

struct FeSpec {
  std::string fe;
  fnv::PhraseCat cat;
  std::optional<fnv::GrammRel> rel = std::nullopt;
  std::optional<std::string> marker = std::nullopt;
  bool core = true;
};

inline fnv::SentencePattern sentence(const std::string& frame, fnv::VerbType vt,
                                     fnv::Voice voice,
                                     const std::vector<FeSpec>& fes,
                                     const std::string& lemma = "verb",
                                     int count = 1) {
  fnv::SentencePattern p;
  p.frame = frame;
  p.verb_type = vt;
  p.voice = voice;
  for (const FeSpec& f : fes) {
    fnv::FERealization r;
    r.fe_name = f.fe;
    r.cat = f.cat;
    r.raw_label = fnv::to_string(f.cat);
    r.rel = f.cat == fnv::PhraseCat::NP ? f.rel : std::nullopt;
    r.marker = f.marker;
    r.is_core = f.core;
    p.fes.push_back(std::move(r));
  }
  p.lu.lemma = lemma;
  p.lu_morph.base_form = lemma;
  p.lu_morph.components.push_back({lemma, "VERB", "Fin"});
  p.count = count;
  return p;
}

// ------------------------------------------------------------ random patterns

// Small randomized valence patterns: at most `max_frames` frames and
// `max_fes` FE triples, drawn from fixed pools so collisions are common.
class PatternGen {
 public:
  explicit PatternGen(unsigned seed) : rng_(seed) {}

  fnv::ValencePattern pattern(int max_frames = 3, int max_fes = 4) {
    static const char* kFrames[] = {"Alpha", "Beta", "Gamma"};
    static const char* kFes[] = {"Agent", "Theme", "Goal", "Manner", "Source"};
    static const fnv::PhraseCat kCats[] = {fnv::PhraseCat::NP, fnv::PhraseCat::VP,
                                           fnv::PhraseCat::Adv, fnv::PhraseCat::S};
    static const fnv::VerbType kTypes[] = {fnv::VerbType::V, fnv::VerbType::V2,
                                           fnv::VerbType::VV};
    fnv::ValencePattern v;
    v.frame = kFrames[pick(max_frames)];
    v.verb_type = kTypes[pick(3)];
    v.voice = pick(4) == 0 ? fnv::Voice::Pass : fnv::Voice::Act;
    int n = pick(max_fes + 1);
    for (int i = 0; i < n; ++i) {
      fnv::FETriple t;
      t.fe_name = kFes[pick(5)];
      t.cat = kCats[pick(4)];
      if (t.cat == fnv::PhraseCat::NP)
        t.rel = pick(2) ? fnv::GrammRel::nsubj : fnv::GrammRel::dobj;
      if (std::find(v.fes.begin(), v.fes.end(), t) == v.fes.end())
        v.fes.push_back(t);
    }
    std::sort(v.fes.begin(), v.fes.end(),
              [](const fnv::FETriple& a, const fnv::FETriple& b) {
                return fnv::serialize(a) < fnv::serialize(b);
              });
    v.count = 1 + pick(9);
    v.top_sentence_pattern.frame = v.frame;
    return v;
  }

  std::vector<fnv::ValencePattern> pattern_set(int max_size) {
    std::vector<fnv::ValencePattern> out;
    std::set<std::string> seen;
    int n = pick(max_size + 1);
    for (int i = 0; i < n; ++i) {
      fnv::ValencePattern v = pattern();
      if (seen.insert(fnv::serialize(v)).second) out.push_back(std::move(v));
    }
    return out;
  }

  // Random sentence pattern with explicit core flags, for coverage checks.
  fnv::SentencePattern sentence_pattern() {
    static const char* kFrames[] = {"Alpha", "Beta", "Gamma"};
    static const char* kFes[] = {"Agent", "Theme", "Goal", "Manner"};
    std::vector<FeSpec> fes;
    int n = pick(4);
    for (int i = 0; i < n; ++i) {
      FeSpec f;
      f.fe = kFes[pick(4)];
      f.cat = pick(2) ? fnv::PhraseCat::NP : fnv::PhraseCat::Adv;
      if (f.cat == fnv::PhraseCat::NP)
        f.rel = pick(2) ? fnv::GrammRel::nsubj : fnv::GrammRel::dobj;
      f.core = pick(4) != 0;
      fes.push_back(std::move(f));
    }
    static const fnv::VerbType kTypes[] = {fnv::VerbType::V, fnv::VerbType::V2};
    fnv::SentencePattern p =
        sentence(kFrames[pick(3)], kTypes[pick(2)],
                 pick(5) == 0 ? fnv::Voice::Pass : fnv::Voice::Act, fes);
    p.count = 1 + pick(3);
    return p;
  }

  int pick(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }

 private:
  std::mt19937 rng_;
};

// ------------------------------------------------------- independent oracles

// Subsumption re-stated from scratch with set machinery (the production code
// uses linear scans over vectors).
inline bool subsumes_oracle(const fnv::ValencePattern& a,
                            const fnv::ValencePattern& b) {
  if (a.frame != b.frame || a.verb_type != b.verb_type || a.voice != b.voice)
    return false;
  std::set<std::string> super;
  for (const fnv::FETriple& t : a.fes) super.insert(fnv::serialize(t));
  for (const fnv::FETriple& t : b.fes)
    if (!super.count(fnv::serialize(t))) return false;
  return true;
}

// ---------------------------------------------------------- sample corpora

inline std::vector<fnv::AnnotatedSentence> load_sample(const std::string& lang) {
  fnv::IngestOptions opts;
  opts.language = lang;
  // mirror data/core_fes.tsv without parsing it twice
  std::ifstream core(data_path("core_fes.tsv"));
  std::string line;
  while (std::getline(core, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab != std::string::npos)
      opts.core_fes[line.substr(0, tab)].insert(line.substr(tab + 1));
  }
  std::ifstream in(data_path(lang == "eng" ? "sample_eng.xml" : "sample_swe.xml"));
  return lang == "eng" ? fnv::parse_phrase_structure_corpus(in, opts)
                       : fnv::parse_dependency_corpus(in, opts);
}

struct SamplePipeline {
  std::vector<fnv::SentencePattern> eng_patterns, swe_patterns;
  std::vector<fnv::ValencePattern> eng_valences, swe_valences;
  fnv::SharedSet shared;
};

// Ingest -> extract (2.B) -> normalize -> shared set over the bundled corpora.
inline SamplePipeline run_sample_pipeline() {
  fnv::CatMap catmap = fnv::CatMap::load_file(data_path("catmap.tsv"));
  fnv::Settings settings = *fnv::Settings::parse("2.B");
  SamplePipeline out;
  out.eng_patterns =
      fnv::aggregate(fnv::extract_corpus(load_sample("eng"), settings, catmap));
  out.swe_patterns =
      fnv::aggregate(fnv::extract_corpus(load_sample("swe"), settings, catmap));
  out.eng_valences = fnv::normalize(out.eng_patterns);
  out.swe_valences = fnv::normalize(out.swe_patterns);
  out.shared = fnv::shared_set(out.eng_valences, "eng", out.swe_valences, "swe");
  return out;
}

}  // namespace fixtures

#endif
