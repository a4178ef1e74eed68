#include "fnvalence/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fnvalence/catmap.hpp"
#include "fnvalence/corpus_ingest.hpp"
#include "fnvalence/grammar_gen.hpp"
#include "fnvalence/json_io.hpp"
#include "fnvalence/lexicon_align.hpp"
#include "fnvalence/lexicon_gen.hpp"
#include "fnvalence/pattern_extract.hpp"
#include "fnvalence/pattern_normalize.hpp"
#include "fnvalence/realizer.hpp"
#include "fnvalence/shared_patterns.hpp"

namespace fs = std::filesystem;

namespace fnv {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string out_path(const PipelineConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out_dir) / name).string();
}

std::vector<std::string> language_codes(const PipelineConfig& cfg) {
  std::vector<std::string> langs;
  for (const auto& [code, lc] : cfg.languages) langs.push_back(code);
  std::sort(langs.begin(), langs.end());
  return langs;
}

std::map<std::string, std::set<std::string>> load_core_fes(const std::string& path) {
  std::map<std::string, std::set<std::string>> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open core FE table: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    out[line.substr(0, tab)].insert(line.substr(tab + 1));
  }
  return out;
}

StageResult fail(const std::string& msg) {
  StageResult r;
  r.exit_code = kExitDataError;
  r.message = msg;
  return r;
}

StageResult do_ingest(const PipelineConfig& cfg) {
  StageResult r;
  auto core_fes = load_core_fes(cfg.core_fes_path);
  for (const auto& [code, lc] : cfg.languages) {
    std::ifstream in(lc.corpus_path);
    if (!in) return fail("cannot open corpus: " + lc.corpus_path);
    IngestOptions opts;
    opts.language = code;
    opts.default_frame = lc.default_frame;
    opts.core_fes = core_fes;
    auto sentences = lc.scheme == SourceScheme::PhraseStructure
                         ? parse_phrase_structure_corpus(in, opts)
                         : parse_dependency_corpus(in, opts);
    std::string path = out_path(cfg, code + ".sentences.json");
    write_artifact(path, sentences_artifact(sentences, lc.settings.str()));
    r.artifacts_written.push_back(path);
  }
  return r;
}

StageResult do_extract(const PipelineConfig& cfg) {
  StageResult r;
  CatMap catmap = CatMap::load_file(cfg.catmap_path);
  for (const auto& [code, lc] : cfg.languages) {
    auto sentences = sentences_from_artifact(
        load_artifact(out_path(cfg, code + ".sentences.json"), "sentences"));
    ExtractStats stats;
    auto patterns = extract_corpus(sentences, lc.settings, catmap, &stats);
    patterns = aggregate(std::move(patterns), lc.settings.generalize());
    std::string path = out_path(cfg, code + ".sentence_patterns.json");
    write_artifact(path, sentence_patterns_artifact(patterns, lc.settings.str()));
    r.artifacts_written.push_back(path);
    std::ostringstream msg;
    msg << code << ": " << stats.examples_kept << "/" << stats.examples_in
        << " examples kept, " << patterns.size() << " sentence patterns\n";
    r.message += msg.str();
  }
  return r;
}

StageResult do_normalize(const PipelineConfig& cfg) {
  StageResult r;
  for (const auto& [code, lc] : cfg.languages) {
    auto patterns = sentence_patterns_from_artifact(
        load_artifact(out_path(cfg, code + ".sentence_patterns.json"), "sentence_patterns"));
    auto valences = normalize(patterns);
    if (lc.settings.prune_singletons()) valences = prune_singletons(std::move(valences));
    std::string path = out_path(cfg, code + ".valence_patterns.json");
    write_artifact(path, valence_patterns_artifact(valences, lc.settings.str()));
    r.artifacts_written.push_back(path);

    std::set<std::string> frames;
    for (const ValencePattern& v : valences) frames.insert(v.frame);
    std::ofstream sum(out_path(cfg, code + ".summary.txt"));
    for (const std::string& f : frames) sum << f << "\n" << summarize(valences, f);
    r.artifacts_written.push_back(out_path(cfg, code + ".summary.txt"));
  }
  return r;
}

StageResult do_share(const PipelineConfig& cfg) {
  auto langs = language_codes(cfg);
  if (langs.size() != 2) return fail("share stage needs exactly two languages");
  auto v1 = valence_patterns_from_artifact(
      load_artifact(out_path(cfg, langs[0] + ".valence_patterns.json"), "valence_patterns"));
  auto v2 = valence_patterns_from_artifact(
      load_artifact(out_path(cfg, langs[1] + ".valence_patterns.json"), "valence_patterns"));
  SharedSet shared = shared_set(v1, langs[0], v2, langs[1]);
  StageResult r;
  std::string path = out_path(cfg, "shared.json");
  write_artifact(path, make_artifact("shared_set", "", to_json(shared)));
  r.artifacts_written.push_back(path);
  r.message = std::to_string(shared.patterns.size()) + " shared patterns, " +
              std::to_string(shared.frames().size()) + " frames\n";
  return r;
}

StageResult do_gen_grammar(const PipelineConfig& cfg) {
  auto langs = language_codes(cfg);
  SharedSet shared =
      shared_set_from_json(load_artifact(out_path(cfg, "shared.json"), "shared_set").at("items"));
  Grammar g = build_grammar(shared, langs);
  StageResult r;
  std::string path = out_path(cfg, "grammar.json");
  write_artifact(path, make_artifact("grammar", "", to_json(g)));
  r.artifacts_written.push_back(path);
  {
    std::ofstream out(out_path(cfg, "FrameNet.gf"));
    out << gen_abstract(g);
    r.artifacts_written.push_back(out_path(cfg, "FrameNet.gf"));
  }
  for (const std::string& lang : langs) {
    std::string suffix = lang;
    if (!suffix.empty())
      suffix[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(suffix[0])));
    std::ofstream out(out_path(cfg, "FrameNet" + suffix + ".gf"));
    out << gen_concrete(g, lang);
    r.artifacts_written.push_back(out_path(cfg, "FrameNet" + suffix + ".gf"));
  }
  {
    std::ofstream out(out_path(cfg, "census.tsv"));
    out << signature_census_tsv(shared);
    r.artifacts_written.push_back(out_path(cfg, "census.tsv"));
  }
  return r;
}

StageResult do_gen_lexicon(const PipelineConfig& cfg) {
  SharedSet shared =
      shared_set_from_json(load_artifact(out_path(cfg, "shared.json"), "shared_set").at("items"));
  StageResult r;
  for (const auto& [code, lc] : cfg.languages) {
    auto patterns = sentence_patterns_from_artifact(
        load_artifact(out_path(cfg, code + ".sentence_patterns.json"), "sentence_patterns"));
    auto entries = collect_lexicon(shared, patterns, code);
    std::vector<std::string> warnings;
    auto paradigms = load_paradigms(lc.paradigm_paths, &warnings);
    LexiconReport report = gen_concrete_lexicon(entries, paradigms);
    for (const std::string& w : warnings) r.message += w + "\n";

    std::string path = out_path(cfg, code + ".lexicon.json");
    write_artifact(path, lexicon_artifact(entries, lc.settings.str()));
    r.artifacts_written.push_back(path);
    {
      std::ofstream out(out_path(cfg, code + ".lexicon-abstract.gf"));
      out << lexicon_abstract_text(entries, "Lexicon");
    }
    {
      std::ofstream out(out_path(cfg, code + ".lexicon-concrete.gf"));
      out << lexicon_concrete_text(entries, "Lexicon", code);
    }
    {
      std::ofstream out(out_path(cfg, code + ".lexicon-gaps.tsv"));
      out << gap_report_tsv(report);
    }
    r.artifacts_written.push_back(out_path(cfg, code + ".lexicon-abstract.gf"));
    r.artifacts_written.push_back(out_path(cfg, code + ".lexicon-concrete.gf"));
    r.artifacts_written.push_back(out_path(cfg, code + ".lexicon-gaps.tsv"));
    r.message += code + ": " + std::to_string(report.linearized) + "/" +
                 std::to_string(report.total) + " entries linearized\n";
  }
  return r;
}

StageResult do_align(const PipelineConfig& cfg) {
  auto langs = language_codes(cfg);
  if (langs.size() != 2) return fail("align stage needs exactly two languages");
  auto l1 = lexicon_from_artifact(
      load_artifact(out_path(cfg, langs[0] + ".lexicon.json"), "lexicon"));
  auto l2 = lexicon_from_artifact(
      load_artifact(out_path(cfg, langs[1] + ".lexicon.json"), "lexicon"));
  BilingualDict dict = load_bilingual_dict_file(cfg.bilingual_dict_path);
  AlignmentResult result = align(l1, l2, dict);

  StageResult r;
  std::string path = out_path(cfg, "alignment.json");
  write_artifact(path, make_artifact("alignment", "", to_json(result)));
  r.artifacts_written.push_back(path);

  SharedLexiconText text = gen_shared_lexicon(result.aligned, "SharedLexicon",
                                              langs[0], langs[1]);
  auto emit = [&](const std::string& name, const std::string& body) {
    std::ofstream out(out_path(cfg, name));
    out << body;
    r.artifacts_written.push_back(out_path(cfg, name));
  };
  emit("SharedLexicon.gf", text.abstract_module);
  std::string s1 = langs[0], s2 = langs[1];
  s1[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s1[0])));
  s2[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s2[0])));
  emit("SharedLexicon" + s1 + ".gf", text.l1_concrete);
  emit("SharedLexicon" + s2 + ".gf", text.l2_concrete);
  emit("unaligned.tsv", unaligned_report_tsv(result));
  r.message = std::to_string(result.aligned.size()) + " aligned, " +
              std::to_string(result.unaligned.size()) + " unaligned\n";
  return r;
}

StageResult do_stats(const PipelineConfig& cfg) {
  StageResult r;
  std::ostringstream os;
  bool header = true;
  for (const auto& [code, lc] : cfg.languages) {
    auto patterns = sentence_patterns_from_artifact(
        load_artifact(out_path(cfg, code + ".sentence_patterns.json"), "sentence_patterns"));
    auto valences = valence_patterns_from_artifact(
        load_artifact(out_path(cfg, code + ".valence_patterns.json"), "valence_patterns"));
    RunStats st = run_stats(valences, patterns, code + "/" + lc.settings.str());
    os << stats_tsv_row(st, header);
    header = false;
  }
  std::string path = out_path(cfg, "stats.tsv");
  {
    std::ofstream out(path);
    out << os.str();
  }
  r.artifacts_written.push_back(path);

  // coverage against the shared set, when it has been computed
  if (fs::exists(out_path(cfg, "shared.json"))) {
    SharedSet shared = shared_set_from_json(
        load_artifact(out_path(cfg, "shared.json"), "shared_set").at("items"));
    std::ofstream out(out_path(cfg, "coverage.tsv"));
    out << "language\tcoverage\n";
    for (const auto& [code, lc] : cfg.languages) {
      auto patterns = sentence_patterns_from_artifact(
          load_artifact(out_path(cfg, code + ".sentence_patterns.json"), "sentence_patterns"));
      out << code << "\t" << compute_coverage(shared, patterns) << "\n";
    }
    r.artifacts_written.push_back(out_path(cfg, "coverage.tsv"));
  }
  return r;
}

StageResult do_realize(const PipelineConfig& cfg) {
  Grammar g = grammar_from_json(load_artifact(out_path(cfg, "grammar.json"), "grammar").at("items"));
  StageResult r;
  std::string path = out_path(cfg, "realize.txt");
  std::ofstream out(path);

  for (const auto& [code, lc] : cfg.languages) {
    auto rules = g.rules.find(code);
    if (rules == g.rules.end()) continue;
    auto entries = lexicon_from_artifact(
        load_artifact(out_path(cfg, code + ".lexicon.json"), "lexicon"));
    auto paradigms = load_paradigms(lc.paradigm_paths);
    bool swedish = code == "swe";
    for (const ConcreteRule& rule : rules->second) {
      // frame of the rule's function
      std::string frame;
      for (const FrameFunction& fn : g.functions)
        if (fn.name == rule.function) frame = fn.frame;
      const LexEntry* entry = nullptr;
      for (const LexEntry& e : entries)
        if (e.frame == frame && e.verb_type == rule.verb_type && e.linearization) {
          entry = &e;
          break;
        }
      if (!entry) continue;
      std::string main = entry->lu_morph.components.empty()
                             ? entry->base_form
                             : entry->lu_morph.components[0].text;
      auto pit = paradigms.find(main);
      if (pit == paradigms.end()) continue;
      VerbForms verb = make_verb(pit->second, entry->lu_morph, code);

      std::map<std::string, MaybePhrase> args;
      for (const std::string& a : rule.args) {
        auto us = a.rfind('_');
        auto cat = phrase_cat_from(us == std::string::npos ? a : a.substr(us + 1));
        if (!cat) continue;
        switch (*cat) {
          case PhraseCat::NP: args[a] = make_np(swedish ? "de" : "they"); break;
          case PhraseCat::Adv: args[a] = make_adv(swedish ? "här" : "here"); break;
          default: break;  // clausal slots left absent in the smoke run
        }
      }
      Clause c = apply_frame_function(rule, args, verb);
      out << code << "\t" << rule.function << "\t" << combine(c, Tense::Pres) << "\n";
    }
  }
  r.artifacts_written.push_back(path);
  return r;
}

}  // namespace

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  PipelineConfig cfg;
  LanguageConfig* lang = nullptr;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::string code = trim(line.substr(1, line.size() - 2));
      if (code.empty()) throw std::runtime_error("config: empty section at line " + std::to_string(lineno));
      lang = &cfg.languages[code];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: expected key = value at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!lang) {
      if (key == "catmap") cfg.catmap_path = value;
      else if (key == "dict") cfg.bilingual_dict_path = value;
      else if (key == "core_fes") cfg.core_fes_path = value;
      else if (key == "out_dir") cfg.out_dir = value;
      else throw std::runtime_error("config: unknown key '" + key + "' at line " + std::to_string(lineno));
    } else {
      if (key == "corpus") lang->corpus_path = value;
      else if (key == "scheme") {
        if (value == "ps" || value == "phrase-structure") lang->scheme = SourceScheme::PhraseStructure;
        else if (value == "dep" || value == "dependency") lang->scheme = SourceScheme::Dependency;
        else throw std::runtime_error("config: unknown scheme at line " + std::to_string(lineno));
      } else if (key == "settings") {
        auto s = Settings::parse(value);
        if (!s) throw std::runtime_error("config: bad settings at line " + std::to_string(lineno));
        lang->settings = *s;
      } else if (key == "default_frame") lang->default_frame = value;
      else if (key == "paradigms") lang->paradigm_paths = split_list(value);
      else throw std::runtime_error("config: unknown key '" + key + "' at line " + std::to_string(lineno));
    }
  }
  return cfg;
}

StageResult run_stage(Stage stage, const PipelineConfig& cfg) {
  try {
    fs::create_directories(cfg.out_dir);
    switch (stage) {
      case Stage::Ingest: return do_ingest(cfg);
      case Stage::Extract: return do_extract(cfg);
      case Stage::Normalize: return do_normalize(cfg);
      case Stage::Share: return do_share(cfg);
      case Stage::GenGrammar: return do_gen_grammar(cfg);
      case Stage::GenLexicon: return do_gen_lexicon(cfg);
      case Stage::Align: return do_align(cfg);
      case Stage::Stats: return do_stats(cfg);
      case Stage::Realize: return do_realize(cfg);
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("unknown stage");
}

StageResult run_all(const PipelineConfig& cfg) {
  StageResult all;
  for (Stage stage : {Stage::Ingest, Stage::Extract, Stage::Normalize, Stage::Share,
                      Stage::GenGrammar, Stage::GenLexicon, Stage::Align}) {
    StageResult r = run_stage(stage, cfg);
    all.message += r.message;
    all.artifacts_written.insert(all.artifacts_written.end(),
                                 r.artifacts_written.begin(), r.artifacts_written.end());
    if (r.exit_code != kExitOk) {
      all.exit_code = r.exit_code;
      return all;
    }
  }
  return all;
}

}  // namespace fnv
