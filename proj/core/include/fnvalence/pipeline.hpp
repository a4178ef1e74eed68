#ifndef FNVALENCE_PIPELINE_HPP
#define FNVALENCE_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "fnvalence/types.hpp"

namespace fnv {

// Exit codes shared by library and CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

struct LanguageConfig {
  std::string corpus_path;
  SourceScheme scheme = SourceScheme::PhraseStructure;
  Settings settings;
  std::string default_frame;
  std::vector<std::string> paradigm_paths;  // preference order, later wins
};

struct PipelineConfig {
  std::map<std::string, LanguageConfig> languages;  // keyed by language code
  std::string catmap_path;
  std::string bilingual_dict_path;
  std::string core_fes_path;  // optional frame -> core FE TSV
  std::string out_dir = "out";
};

// Simple "key = value" config file with per-language sections
// ("[eng]" headers); flag overrides are applied by the CLI on top.
PipelineConfig load_config(const std::string& path);

enum class Stage { Ingest, Extract, Normalize, Share, GenGrammar, GenLexicon, Align, Stats, Realize };

struct StageResult {
  int exit_code = kExitOk;
  std::vector<std::string> artifacts_written;
  std::string message;
};

StageResult run_stage(Stage stage, const PipelineConfig& cfg);

// Convenience: ingest..align in dependency order.
StageResult run_all(const PipelineConfig& cfg);

}  // namespace fnv

#endif
