// Copyright 2026 The dlperf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dlperf command line: `check`, `corpus`, `catalog`, `rules`.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dlperf/harness.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string format;
  std::string rules;
  std::string catalog;
  int depth = -1;
  int jobs = -1;
  bool show_suppressed = false;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
};

dlperf::Config build_config(const Overrides& o) {
  dlperf::Config c;
  if (!o.config.empty()) c = dlperf::load_config(o.config);
  if (o.format == "json") c.format = dlperf::OutputFormat::Json;
  if (o.format == "text") c.format = dlperf::OutputFormat::Text;
  if (!o.rules.empty()) c.rules = dlperf::parse_rule_list(o.rules);
  if (!o.catalog.empty()) c.catalog = o.catalog;
  if (o.depth >= 0) c.depth_limit = o.depth;
  if (o.jobs >= 0) c.jobs = o.jobs;
  if (o.show_suppressed) c.show_suppressed = true;
  if (!o.include.empty()) c.include = o.include;
  if (!o.exclude.empty()) c.exclude = o.exclude;
  return c;
}

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--rules", o.rules, "Comma-separated rule codes to run");
  cmd->add_option("--catalog", o.catalog, "Catalog JSON merged over the default");
  cmd->add_option("--depth", o.depth, "Inter-procedural depth limit")->check(CLI::Range(0, 64));
  cmd->add_option("-j,--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::Range(0, 1024));
  cmd->add_flag("--show-suppressed", o.show_suppressed, "Also print suppressed findings");
  cmd->add_option("--include", o.include, "Only analyze files matching these globs");
  cmd->add_option("--exclude", o.exclude, "Skip files matching these globs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dlperf: static checks for performance problems in TensorFlow programs"};
  app.require_subcommand(1);

  Overrides check_opts;
  std::vector<std::string> paths;
  auto* check = app.add_subcommand("check", "Analyze Python files and directories");
  check->add_option("paths", paths, "Files or directories")->required();
  add_common(check, check_opts);

  Overrides corpus_opts;
  std::string corpus_root;
  auto* corpus = app.add_subcommand("corpus", "Compare findings with '# expect:' annotations");
  corpus->add_option("root", corpus_root, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  add_common(corpus, corpus_opts);

  std::string catalog_path;
  std::string catalog_format = "json";
  auto* catalog = app.add_subcommand("catalog", "Print the effective API catalog");
  catalog->add_option("--catalog", catalog_path, "Catalog JSON merged over the default");
  catalog->add_option("--format", catalog_format, "Output format")->check(CLI::IsMember({"json", "markdown"}));

  auto* rules = app.add_subcommand("rules", "List the rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      dlperf::Config config = build_config(check_opts);
      std::vector<std::filesystem::path> roots(paths.begin(), paths.end());
      dlperf::CheckResult result = dlperf::run_check(roots, config);
      std::cout << dlperf::render(result, config.format);
      return result.summary.exit_code;
    }
    if (corpus->parsed()) {
      dlperf::Config config = build_config(corpus_opts);
      dlperf::CorpusReport report = dlperf::run_corpus(corpus_root, config);
      std::cout << (config.format == dlperf::OutputFormat::Json ? dlperf::render_corpus_json(report)
                                                                 : dlperf::render_corpus_text(report));
      return report.exit_code;
    }
    if (catalog->parsed()) {
      std::optional<std::filesystem::path> p;
      if (!catalog_path.empty()) p = catalog_path;
      dlperf::ApiCatalog c = dlperf::load_catalog(p);
      std::cout << (catalog_format == "markdown" ? dlperf::catalog_markdown(c) : dlperf::save_catalog(c));
      return 0;
    }
    if (rules->parsed()) {
      for (const auto& r : dlperf::all_rules()) std::cout << r.code << "  " << r.taxonomy_tag << "\n";
      return 0;
    }
  } catch (const dlperf::ConfigError& e) {
    std::cerr << "dlperf: " << e.what() << "\n";
    return 2;
  } catch (const dlperf::CatalogError& e) {
    std::cerr << "dlperf: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
