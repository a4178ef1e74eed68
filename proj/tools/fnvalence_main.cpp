// Command line front end: one subcommand per pipeline stage.
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fnvalence/pipeline.hpp"

namespace {

int run(fnv::Stage stage, const fnv::PipelineConfig& cfg) {
  fnv::StageResult r = fnv::run_stage(stage, cfg);
  if (!r.message.empty()) std::cerr << r.message;
  for (const std::string& a : r.artifacts_written) std::cout << a << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FrameNet valence pattern toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string settings_str;
  app.add_option("-c,--config", config_path, "Pipeline config file")->required();
  app.add_option("-o,--out", out_dir, "Output directory (overrides config)");
  app.add_option("-s,--settings", settings_str,
                 "Experiment settings for all languages, e.g. 2.B");

  const std::map<std::string, fnv::Stage> stages = {
      {"ingest", fnv::Stage::Ingest},       {"extract", fnv::Stage::Extract},
      {"normalize", fnv::Stage::Normalize}, {"share", fnv::Stage::Share},
      {"gen-grammar", fnv::Stage::GenGrammar},
      {"gen-lexicon", fnv::Stage::GenLexicon},
      {"align", fnv::Stage::Align},         {"stats", fnv::Stage::Stats},
      {"realize", fnv::Stage::Realize}};
  for (const auto& [name, stage] : stages) app.add_subcommand(name);
  CLI::App* all = app.add_subcommand("run-all", "Ingest through align");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : fnv::kExitUsageError;
  }

  fnv::PipelineConfig cfg;
  try {
    cfg = fnv::load_config(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!settings_str.empty()) {
      auto s = fnv::Settings::parse(settings_str);
      if (!s) {
        std::cerr << "invalid settings: " << settings_str << "\n";
        return fnv::kExitUsageError;
      }
      for (auto& [code, lc] : cfg.languages) lc.settings = *s;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return fnv::kExitUsageError;
  }

  if (all->parsed()) {
    fnv::StageResult r = fnv::run_all(cfg);
    if (!r.message.empty()) std::cerr << r.message;
    for (const std::string& a : r.artifacts_written) std::cout << a << "\n";
    return r.exit_code;
  }
  for (const auto& [name, stage] : stages)
    if (app.get_subcommand(name)->parsed()) return run(stage, cfg);
  return fnv::kExitUsageError;
}
