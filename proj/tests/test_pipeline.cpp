#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "fixtures.hpp"
#include "fnvalence/pipeline.hpp"

using namespace fnv;
namespace fs = std::filesystem;

namespace {

// Self-cleaning scratch directory for pipeline outputs.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& stem) {
    path = fs::temp_directory_path() / (stem + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string write_temp_conf(const TempDir& dir, const std::string& body) {
  fs::create_directories(dir.path);
  fs::path p = dir.path / "test.conf";
  std::ofstream(p) << body;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PipelineConfig sample_config(const fs::path& out_dir) {
  PipelineConfig cfg;
  cfg.catmap_path = fixtures::data_path("catmap.tsv");
  cfg.bilingual_dict_path = fixtures::data_path("dict_eng_swe.tsv");
  cfg.core_fes_path = fixtures::data_path("core_fes.tsv");
  cfg.out_dir = out_dir.string();

  LanguageConfig eng;
  eng.corpus_path = fixtures::data_path("sample_eng.xml");
  eng.scheme = SourceScheme::PhraseStructure;
  eng.settings = *Settings::parse("2.B");
  eng.paradigm_paths = {fixtures::data_path("paradigms_eng_base.tsv"),
                        fixtures::data_path("paradigms_eng_extra.tsv")};
  cfg.languages["eng"] = eng;

  LanguageConfig swe;
  swe.corpus_path = fixtures::data_path("sample_swe.xml");
  swe.scheme = SourceScheme::Dependency;
  swe.settings = *Settings::parse("2.B");
  swe.paradigm_paths = {fixtures::data_path("paradigms_swe_base.tsv"),
                        fixtures::data_path("paradigms_swe_extra.tsv")};
  cfg.languages["swe"] = swe;
  return cfg;
}

}  // namespace

TEST_CASE("config files parse globals, sections and lists") {
  TempDir dir("fnv-conf");
  std::string conf = write_temp_conf(dir,
      "# comment\n"
      "catmap = maps/cat.tsv\n"
      "dict = d.tsv\n"
      "out_dir = results\n"
      "\n"
      "[eng]\n"
      "corpus = c.xml\n"
      "scheme = ps\n"
      "settings = 2.B\n"
      "paradigms = a.tsv, b.tsv\n"
      "[swe]\n"
      "corpus = s.xml\n"
      "scheme = dependency\n"
      "settings = 1.A\n");
  PipelineConfig cfg = load_config(conf);
  CHECK(cfg.catmap_path == "maps/cat.tsv");
  CHECK(cfg.out_dir == "results");
  REQUIRE(cfg.languages.count("eng"));
  REQUIRE(cfg.languages.count("swe"));
  CHECK(cfg.languages["eng"].scheme == SourceScheme::PhraseStructure);
  CHECK(cfg.languages["eng"].settings.str() == "2.B");
  REQUIRE(cfg.languages["eng"].paradigm_paths.size() == 2);
  CHECK(cfg.languages["eng"].paradigm_paths[1] == "b.tsv");
  CHECK(cfg.languages["swe"].scheme == SourceScheme::Dependency);
  CHECK(cfg.languages["swe"].settings.str() == "1.A");
}

TEST_CASE("config errors carry the offending line") {
  TempDir dir("fnv-confbad");
  CHECK_THROWS(load_config("/nonexistent/none.conf"));
  CHECK_THROWS_WITH_AS(load_config(write_temp_conf(dir, "just words\n")),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS(load_config(write_temp_conf(dir, "mystery = 1\n")));
  CHECK_THROWS(load_config(write_temp_conf(dir, "[eng]\nscheme = odd\n")));
  CHECK_THROWS(load_config(write_temp_conf(dir, "[eng]\nsettings = 9.Z\n")));
  CHECK_THROWS(load_config(write_temp_conf(dir, "[]\n")));
}

TEST_CASE("the full pipeline runs over the bundled corpora") {
  TempDir dir("fnv-runall");
  PipelineConfig cfg = sample_config(dir.path / "out");
  StageResult r = run_all(cfg);
  REQUIRE_MESSAGE(r.exit_code == kExitOk, r.message);
  for (const char* name :
       {"eng.sentences.json", "swe.sentences.json", "eng.sentence_patterns.json",
        "eng.valence_patterns.json", "shared.json", "grammar.json", "FrameNet.gf",
        "FrameNetEng.gf", "FrameNetSwe.gf", "census.tsv", "eng.lexicon.json",
        "swe.lexicon.json", "alignment.json", "SharedLexicon.gf",
        "SharedLexiconEng.gf", "SharedLexiconSwe.gf", "unaligned.tsv"})
    CHECK_MESSAGE(fs::exists(fs::path(cfg.out_dir) / name), name);
  CHECK(r.message.find("13 aligned, 2 unaligned") != std::string::npos);

  // stats and realization consume what run_all wrote
  CHECK(run_stage(Stage::Stats, cfg).exit_code == kExitOk);
  CHECK(fs::exists(fs::path(cfg.out_dir) / "stats.tsv"));
  std::string coverage = slurp(fs::path(cfg.out_dir) / "coverage.tsv");
  CHECK(coverage.find("eng\t1") != std::string::npos);
  CHECK(coverage.find("swe\t1") != std::string::npos);

  CHECK(run_stage(Stage::Realize, cfg).exit_code == kExitOk);
  std::string realized = slurp(fs::path(cfg.out_dir) / "realize.txt");
  CHECK(realized.find("eng\tResidence_V\tthey live here") != std::string::npos);
  CHECK(realized.find("swe\tPossession_V2\tde har de") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  TempDir dir("fnv-rerun");
  PipelineConfig cfg = sample_config(dir.path / "out");
  REQUIRE(run_all(cfg).exit_code == kExitOk);
  std::string shared1 = slurp(fs::path(cfg.out_dir) / "shared.json");
  std::string abs1 = slurp(fs::path(cfg.out_dir) / "FrameNet.gf");
  std::string lex1 = slurp(fs::path(cfg.out_dir) / "swe.lexicon-concrete.gf");
  REQUIRE(run_all(cfg).exit_code == kExitOk);
  CHECK(shared1 == slurp(fs::path(cfg.out_dir) / "shared.json"));
  CHECK(abs1 == slurp(fs::path(cfg.out_dir) / "FrameNet.gf"));
  CHECK(lex1 == slurp(fs::path(cfg.out_dir) / "swe.lexicon-concrete.gf"));
}

TEST_CASE("stages can resume from existing artifacts") {
  TempDir dir("fnv-resume");
  PipelineConfig cfg = sample_config(dir.path / "out");
  REQUIRE(run_stage(Stage::Ingest, cfg).exit_code == kExitOk);
  REQUIRE(run_stage(Stage::Extract, cfg).exit_code == kExitOk);
  StageResult r = run_stage(Stage::Normalize, cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(fs::exists(fs::path(cfg.out_dir) / "eng.valence_patterns.json"));
}

TEST_CASE("missing upstream artifacts fail with a data error") {
  TempDir dir("fnv-missing");
  PipelineConfig cfg = sample_config(dir.path / "out");
  StageResult r = run_stage(Stage::Extract, cfg);  // nothing ingested yet
  CHECK(r.exit_code == kExitDataError);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("unreadable corpus paths fail with a data error") {
  TempDir dir("fnv-badcorpus");
  PipelineConfig cfg = sample_config(dir.path / "out");
  cfg.languages["eng"].corpus_path = "/nonexistent/corpus.xml";
  StageResult r = run_all(cfg);
  CHECK(r.exit_code == kExitDataError);
  CHECK(r.message.find("cannot open corpus") != std::string::npos);
}

TEST_CASE("the share stage requires a bilingual setup") {
  TempDir dir("fnv-onelang");
  PipelineConfig cfg = sample_config(dir.path / "out");
  cfg.languages.erase("swe");
  REQUIRE(run_stage(Stage::Ingest, cfg).exit_code == kExitOk);
  REQUIRE(run_stage(Stage::Extract, cfg).exit_code == kExitOk);
  REQUIRE(run_stage(Stage::Normalize, cfg).exit_code == kExitOk);
  StageResult r = run_stage(Stage::Share, cfg);
  CHECK(r.exit_code == kExitDataError);
  CHECK(r.message.find("two languages") != std::string::npos);
}
